use rayon::prelude::*;

use crate::error::{check_cap, Result};

use super::group::{UnitGroup, DEFAULT_GROUP_CAP};

/// A subgroup of a [`UnitGroup`], as the sorted list of element indices
/// together with a generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { elements: vec![0], generators: Vec::new() }
    }

    /// Trusts the caller that `elements` (sorted) is the subgroup generated
    /// by `generators`.
    pub(crate) fn from_parts(_g: &UnitGroup, elements: Vec<usize>, generators: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements, generators }
    }

    /// A known subgroup given by its sorted elements; generators are chosen
    /// greedily, trying `hints` first.
    pub(crate) fn from_elements(g: &UnitGroup, elements: Vec<usize>, hints: &[usize]) -> Self {
        let candidates = hints.iter().copied().chain(elements.iter().copied());
        let generators = Self::greedy_generators(g, candidates, elements.len());
        Subgroup { elements, generators }
    }

    pub(crate) fn greedy_generators(g: &UnitGroup, candidates: impl IntoIterator<Item = usize>, target: usize) -> Vec<usize> {
        let mut h = Subgroup::trivial();
        for c in candidates {
            if h.order() >= target {
                break;
            }
            if !h.contains(c) {
                h = h.extend(g, c, u128::MAX).expect("no cap");
            }
        }
        h.generators
    }

    /// The subgroup generated by `gens`.
    pub fn closure(g: &UnitGroup, gens: &[usize]) -> Result<Self> {
        Self::closure_with_cap(g, gens, DEFAULT_GROUP_CAP)
    }

    pub fn closure_with_cap(g: &UnitGroup, gens: &[usize], cap: u128) -> Result<Self> {
        let mut h = Subgroup::trivial();
        for &x in gens {
            if !h.contains(x) {
                h = h.extend(g, x, cap)?;
            }
        }
        Ok(h)
    }

    /// `<self, x>`, reusing the elements already known.
    pub fn extend(&self, g: &UnitGroup, x: usize, cap: u128) -> Result<Self> {
        let mut member = vec![false; g.order()];
        for &e in &self.elements {
            member[e] = true;
        }
        let mut gens = self.generators.clone();
        gens.push(x);
        let mut count = self.elements.len();
        let mut queue = Vec::new();
        for &h in &self.elements {
            let y = g.mul(h, x);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
        count += queue.len();
        while let Some(y) = queue.pop() {
            check_cap(count as u128, cap)?;
            for &s in &gens {
                let z = g.mul(y, s);
                if !member[z] {
                    member[z] = true;
                    count += 1;
                    queue.push(z);
                }
            }
        }
        check_cap(count as u128, cap)?;
        let elements = (0..g.order()).filter(|&i| member[i]).collect();
        Ok(Subgroup { elements, generators: gens })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Stable under conjugation by the generators of `g`.
    pub fn is_normal(&self, g: &UnitGroup) -> bool {
        g.generators().iter().all(|&t| self.generators.iter().all(|&s| self.contains(g.conj(t, s))))
    }

    /// Minimal element of each left coset `xH`, in increasing order.
    pub fn left_transversal(&self, g: &UnitGroup) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for &h in &self.elements {
                seen[g.mul(x, h)] = true;
            }
        }
        reps
    }
}

/// `(S1, S2)`: the subgroup generated by all `s1 s2 s1^{-1} s2^{-1}`.
pub fn commutator_subgroup(g: &UnitGroup, s1: &Subgroup, s2: &Subgroup) -> Result<Subgroup> {
    let mut comms: Vec<usize> = s1
        .elements()
        .par_iter()
        .flat_map_iter(|&a| s2.elements().iter().map(move |&b| g.comm(a, b)))
        .collect();
    comms.sort_unstable();
    comms.dedup();
    let mut h = Subgroup::trivial();
    for c in comms {
        if !h.contains(c) {
            h = h.extend(g, c, DEFAULT_GROUP_CAP)?;
        }
    }
    Ok(h)
}

/// Outcome of testing `(1+A^m, 1+A^n) ⊆ (1+A, 1+A^{m+n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CommutatorCheck {
    pub m: usize,
    pub n: usize,
    pub lhs_order: usize,
    pub rhs_order: usize,
    pub holds: bool,
    /// An element of the left side outside the right side, as coordinates.
    pub witness: Option<Vec<Vec<u32>>>,
}

pub fn check_commutator_theorem(g: &UnitGroup, m: usize, n: usize) -> Result<CommutatorCheck> {
    assert!(m >= 1 && n >= 1);
    let lhs = commutator_subgroup(g, &g.power_subgroup(m), &g.power_subgroup(n))?;
    let rhs = commutator_subgroup(g, &g.as_subgroup(), &g.power_subgroup(m + n - 1))?;
    let witness = lhs.elements().iter().find(|&&x| !rhs.contains(x)).map(|&x| g.element_json(x));
    Ok(CommutatorCheck { m, n, lhs_order: lhs.order(), rhs_order: rhs.order(), holds: witness.is_none(), witness })
}
