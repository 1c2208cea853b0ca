use serde::Serialize;

use super::group::UnitGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Smallest member.
    pub representative: usize,
    /// Sorted members.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The conjugacy classes of a group, ordered by size and then by smallest
/// member, so the identity class comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    inverse: Vec<usize>,
}

impl ConjugacyClasses {
    pub(crate) fn compute(g: &UnitGroup) -> Self {
        let n = g.order();
        let gens = g.generators();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            let mut members = vec![x];
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for &t in gens {
                    let z = g.conj(t, y);
                    if !seen[z] {
                        seen[z] = true;
                        members.push(z);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: members[0], members });
        }
        classes.sort_by_key(|c| (c.size(), c.representative));
        let mut class_of = vec![0u32; n];
        for (k, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = k as u32;
            }
        }
        let inverse = classes.iter().map(|c| class_of[g.inv(c.representative)] as usize).collect();
        ConjugacyClasses { classes, class_of, inverse }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn get(&self, k: usize) -> &ConjugacyClass {
        &self.classes[k]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Class of the inverses of class `k`.
    pub fn inverse(&self, k: usize) -> usize {
        self.inverse[k]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    /// Class containing `g_k^e` for the representative `g_k`.
    pub fn power_class(&self, g: &UnitGroup, k: usize, e: u64) -> usize {
        self.class_of(g.pow(self.classes[k].representative, e))
    }
}
