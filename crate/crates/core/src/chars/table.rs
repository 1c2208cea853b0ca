use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::exactfield::Cyclotomic;
use crate::unitgroup::UnitGroup;

use super::classfn::{inner_product, ClassFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    order: usize,
    exponent: u64,
    prime: u64,
    primitive_root: u64,
    class_sizes: Vec<usize>,
    representatives: Vec<usize>,
    characters: Vec<ClassFunction>,
}

#[derive(Serialize)]
struct ClassJson {
    representative: Vec<Vec<u32>>,
    size: usize,
}

#[derive(Serialize)]
struct CharacterJson {
    degree: i64,
    values: Vec<BTreeMap<String, String>>,
    orders: Vec<u64>,
}

#[derive(Serialize)]
struct TableJson {
    order: usize,
    exponent: u64,
    dixon_prime: u64,
    primitive_root: u64,
    classes: Vec<ClassJson>,
    characters: Vec<CharacterJson>,
}

impl CharacterTable {
    pub(crate) fn assemble(g: &UnitGroup, characters: Vec<ClassFunction>, prime: u64, primitive_root: u64) -> Self {
        let cl = g.classes();
        CharacterTable {
            order: g.order(),
            exponent: g.exponent(),
            prime,
            primitive_root,
            class_sizes: cl.sizes(),
            representatives: cl.classes().iter().map(|c| c.representative).collect(),
            characters,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The prime `l` used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Primitive root `z` mod `l`; `zeta_N` is identified with `z^{(l-1)/N}`.
    pub fn primitive_root(&self) -> u64 {
        self.primitive_root
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.characters.iter().map(|c| c.degree().expect("integral degree")).collect()
    }

    /// Multiplicity of each irreducible in a class function.
    pub fn decompose(&self, g: &UnitGroup, phi: &ClassFunction) -> Vec<Cyclotomic> {
        self.characters.iter().map(|chi| inner_product(g, phi, chi)).collect()
    }

    /// First failed orthogonality relation, if any.
    pub fn check_orthogonality(&self, g: &UnitGroup) -> Result<(), String> {
        let r = self.characters.len();
        if r != self.class_sizes.len() {
            return Err(format!("{r} characters for {} classes", self.class_sizes.len()));
        }
        let sum_sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if sum_sq != self.order as i64 {
            return Err(format!("degrees square-sum to {sum_sq}"));
        }
        for i in 0..r {
            for j in i..r {
                let ip = inner_product(g, &self.characters[i], &self.characters[j]);
                if ip != Cyclotomic::from_int((i == j) as i64) {
                    return Err(format!("<chi{}, chi{}> = {ip}", i + 1, j + 1));
                }
            }
        }
        let conj: Vec<Vec<Cyclotomic>> = self.characters.iter().map(|c| c.values().iter().map(|v| v.conj()).collect()).collect();
        for a in 0..r {
            for b in a..r {
                let s: Cyclotomic = (0..r).map(|i| self.characters[i].value(a) * &conj[i][b]).sum();
                let expected = if a == b {
                    Cyclotomic::from_rational(Rational64::new(self.order as i64, self.class_sizes[a] as i64))
                } else {
                    Cyclotomic::zero()
                };
                if s != expected {
                    return Err(format!("column relation fails for classes {} and {}", a + 1, b + 1));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, g: &UnitGroup) -> String {
        let classes = self
            .representatives
            .iter()
            .zip(&self.class_sizes)
            .map(|(&x, &size)| ClassJson { representative: g.element_json(x), size })
            .collect();
        let characters = self
            .characters
            .iter()
            .map(|c| CharacterJson {
                degree: c.degree().expect("integral degree"),
                values: c.values().iter().map(Cyclotomic::coefficient_map).collect(),
                orders: c.values().iter().map(Cyclotomic::order).collect(),
            })
            .collect();
        let json = TableJson {
            order: self.order,
            exponent: self.exponent,
            dixon_prime: self.prime,
            primitive_root: self.primitive_root,
            classes,
            characters,
        };
        serde_json::to_string_pretty(&json).expect("tables serialize")
    }

    /// One row per character; values as exact expressions in `zetaN`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("character,degree");
        for k in 0..self.class_sizes.len() {
            out.push_str(&format!(",C{}", k + 1));
        }
        out.push('\n');
        out.push_str("class size,");
        for s in &self.class_sizes {
            out.push_str(&format!(",{s}"));
        }
        out.push('\n');
        for (i, c) in self.characters.iter().enumerate() {
            out.push_str(&format!("chi{},{}", i + 1, c.degree().unwrap_or(0)));
            for v in c.values() {
                out.push_str(&format!(",{}", v.to_expr()));
            }
            out.push('\n');
        }
        out
    }
}
