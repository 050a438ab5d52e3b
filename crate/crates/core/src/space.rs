//! Exhaustive sweeps over `Tab_λ` for a fixed shape and entry bound.
//!
//! Every tableau gets an index in enumeration order, each `t_i` becomes an
//! index map, and operator words become composed maps, so relations reduce
//! to comparing integer arrays.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::operators::apply_t_in_place;
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::tableau::{enumerate_tableaux, Tableau, Weight};
use crate::word::{Expander, Generator, TWord, Word, WordError};

/// A map on the indices of a [`TableauSpace`] together with the permutation
/// it is expected to induce on weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Op {
    pub map: Vec<u32>,
    pub rho: Permutation,
}

impl Op {
    /// `self ∘ other`.
    pub fn after(&self, other: &Op) -> Op {
        Op {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
            rho: self.rho.compose(&other.rho),
        }
    }

    pub fn pow(&self, k: usize) -> Op {
        let mut out = Op {
            map: (0..self.map.len() as u32).collect(),
            rho: Permutation::identity(self.rho.degree()),
        };
        for _ in 0..k {
            out = self.after(&out);
        }
        out
    }

    /// Least index moved by the map.
    pub fn first_moved(&self) -> Option<usize> {
        self.map
            .iter()
            .enumerate()
            .position(|(x, &y)| x as u32 != y)
    }
}

pub struct TableauSpace {
    n: usize,
    shape: Partition,
    items: Vec<Tableau>,
    t_maps: Vec<Vec<u32>>,
    weights: Vec<Weight>,
    weight_ids: Vec<u32>,
    expander: Expander,
    cache: BTreeMap<Generator, Op>,
}

impl TableauSpace {
    pub fn new(shape: &Partition, n: usize) -> Self {
        let items: Vec<Tableau> = enumerate_tableaux(shape, n).collect();
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        let mut weight_index: BTreeMap<Weight, u32> = BTreeMap::new();
        let mut weight_ids = Vec::with_capacity(items.len());
        for t in &items {
            let next = weight_index.len() as u32;
            weight_ids.push(*weight_index.entry(t.weight()).or_insert(next));
        }
        let mut weights = alloc::vec![Weight(Vec::new()); weight_index.len()];
        for (w, &id) in &weight_index {
            weights[id as usize] = w.clone();
        }
        let mut space = TableauSpace {
            n,
            shape: shape.clone(),
            items,
            t_maps: Vec::new(),
            weights,
            weight_ids,
            expander: Expander::new(n),
            cache: BTreeMap::new(),
        };
        for i in 1..n {
            let map = space
                .items
                .iter()
                .map(|t| {
                    let mut u = t.clone();
                    apply_t_in_place(&mut u, i);
                    space.index_of(&u).expect("t_i preserves the shape") as u32
                })
                .collect();
            space.t_maps.push(map);
        }
        space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Tableau] {
        &self.items
    }

    pub fn get(&self, idx: usize) -> &Tableau {
        &self.items[idx]
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.items.binary_search(t).ok()
    }

    pub fn identity(&self) -> Op {
        Op {
            map: (0..self.items.len() as u32).collect(),
            rho: Permutation::identity(self.n),
        }
    }

    pub fn tword(&self, word: &TWord) -> Op {
        let mut map: Vec<u32> = (0..self.items.len() as u32).collect();
        for i in word.application_order() {
            let t = &self.t_maps[i - 1];
            for x in map.iter_mut() {
                *x = t[*x as usize];
            }
        }
        Op {
            map,
            rho: word.weight_permutation(self.n),
        }
    }

    /// The map of a single generator, cached.
    pub fn generator(&mut self, g: Generator) -> Result<Op, WordError> {
        if let Some(op) = self.cache.get(&g) {
            return Ok(op.clone());
        }
        Word::single(g).validate(self.n)?;
        let op = self.tword(&self.expander.expand_generator(g));
        self.cache.insert(g, op.clone());
        Ok(op)
    }

    pub fn word(&mut self, word: &Word) -> Result<Op, WordError> {
        word.validate(self.n)?;
        let mut op = self.identity();
        for &g in word.factors().iter().rev() {
            op = self.generator(g)?.after(&op);
        }
        Ok(op)
    }

    /// First index at which the map does not move weights by `op.rho`.
    pub fn rho_violation(&self, op: &Op) -> Option<usize> {
        let index: BTreeMap<&Weight, u32> = self.weights.iter().zip(0u32..).collect();
        let moved: Vec<Option<u32>> = self
            .weights
            .iter()
            .map(|w| index.get(&op.rho.act_on(w)).copied())
            .collect();
        op.map.iter().enumerate().position(|(x, &y)| {
            moved[self.weight_ids[x] as usize] != Some(self.weight_ids[y as usize])
        })
    }

    /// Whether `op` maps the space to itself bijectively.
    pub fn is_permutation(&self, op: &Op) -> bool {
        let mut seen = alloc::vec![false; op.map.len()];
        op.map
            .iter()
            .all(|&y| !core::mem::replace(&mut seen[y as usize], true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{apply_word, bender_knuth};
    use crate::word::parse_word;

    #[test]
    fn maps_agree_with_direct_application() {
        let shape = Partition::new(alloc::vec![3, 1]).unwrap();
        let mut space = TableauSpace::new(&shape, 4);
        let w = parse_word("P D P' sigma2 s3", 4).unwrap();
        let op = space.word(&w).unwrap();
        for (x, t) in space.items().iter().enumerate() {
            assert_eq!(space.get(op.map[x] as usize), &apply_word(&w, t).unwrap());
            assert_eq!(
                space.get(space.t_maps[0][x] as usize),
                &bender_knuth(t, 1).unwrap()
            );
        }
        assert!(space.is_permutation(&op));
        assert_eq!(space.rho_violation(&op), None);
    }

    #[test]
    fn power_and_rho_mismatch() {
        let shape = Partition::new(alloc::vec![2, 1]).unwrap();
        let mut space = TableauSpace::new(&shape, 3);
        assert_eq!(space.len(), 8);
        let t1 = space.generator(Generator::T(1)).unwrap();
        assert_eq!(t1.pow(2), space.identity());
        let wrong = Op {
            map: t1.map.clone(),
            rho: Permutation::identity(3),
        };
        assert!(space.rho_violation(&wrong).is_some());
        assert!(space.generator(Generator::T(3)).is_err());
    }
}
