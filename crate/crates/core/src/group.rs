//! Finite groups of monomial maps, materialized as multiplication tables.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::monomial::MonomialMap;

pub const DEFAULT_MAX_GROUP_ORDER: usize = 10_000;

/// Groups up to this order get a dense `order × order` product table; larger
/// ones multiply on demand.
pub const DENSE_TABLE_LIMIT: usize = 4096;

/// A finite group of monomial maps with index 0 the identity.
///
/// Element indices follow breadth-first discovery from the identity, right
/// multiplying by the generators in sorted order.
#[derive(Debug, Clone)]
pub struct GroupTable {
    dimension: usize,
    elements: Vec<MonomialMap>,
    index: HashMap<MonomialMap, usize>,
    mult: Option<Vec<u32>>,
    inv: Vec<usize>,
    gens: Vec<usize>,
}

impl GroupTable {
    /// Closes `generators` under composition.
    ///
    /// Fails with a resource error when the group outgrows `max_order` or the
    /// generators need a conductor above the field's cap.
    pub fn closure(
        dimension: usize,
        generators: &[MonomialMap],
        max_order: usize,
        field: &CyclotomicField,
    ) -> Result<GroupTable> {
        let mut conductor = 1u32;
        for g in generators {
            if g.dimension() != dimension {
                return Err(Error::input(format!(
                    "generator {g} has dimension {}, expected {dimension}",
                    g.dimension()
                )));
            }
            conductor = conductor.lcm(&g.conductor());
            field.check_conductor(conductor)?;
        }

        let mut sorted: Vec<MonomialMap> = generators.to_vec();
        sorted.sort();
        sorted.dedup();

        let identity = MonomialMap::identity(dimension);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        // elements[child] = elements[parent] ∘ sorted[gen]
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = Vec::with_capacity(sorted.len());
            for (k, gen) in sorted.iter().enumerate() {
                let prod = elements[i].compose_unchecked(gen);
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= max_order {
                            return Err(Error::resource(format!(
                                "group not closed within cap of {max_order} elements"
                            )));
                        }
                        index.insert(prod.clone(), j);
                        elements.push(prod);
                        parent.push((i, k));
                        queue.push_back(j);
                        j
                    }
                };
                row.push(j as u32);
            }
            right.push(row);
        }

        let order = elements.len();
        let mult = (order <= DENSE_TABLE_LIMIT).then(|| {
            let mut mult = vec![0u32; order * order];
            for i in 0..order {
                let row = &mut mult[i * order..(i + 1) * order];
                row[0] = i as u32;
                // discovery order guarantees parents precede children
                for j in 1..order {
                    let (p, k) = parent[j];
                    row[j] = right[row[p] as usize][k];
                }
            }
            mult
        });

        let inv = elements.iter().map(|e| index[&e.inverse()]).collect();
        let gens = generators.iter().map(|g| index[g]).collect();

        Ok(GroupTable {
            dimension,
            elements,
            index,
            mult,
            inv,
            gens,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MonomialMap] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MonomialMap {
        &self.elements[i]
    }

    pub fn index_of(&self, map: &MonomialMap) -> Option<usize> {
        self.index.get(map).copied()
    }

    /// Indices of the input generators, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn has_dense_table(&self) -> bool {
        self.mult.is_some()
    }

    /// Index of `element_i ∘ element_j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mult {
            Some(m) => m[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].compose_unchecked(&self.elements[j])],
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    /// `k⁻¹ g k`.
    pub fn conjugate(&self, g: usize, k: usize) -> usize {
        self.mul(self.inv[k], self.mul(g, k))
    }

    /// Least `m ≥ 1` with `g^m = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut m = 1;
        while x != 0 {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    pub fn conjugacy_classes(&self) -> ConjugacyPartition {
        let order = self.order();
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for g in 0..order {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[g] = c;
            let mut members = vec![g];
            let mut stack = vec![g];
            while let Some(x) = stack.pop() {
                for &k in &self.gens {
                    let y = self.conjugate(x, k);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyPartition { classes, class_of }
    }

    /// Smallest subgroup containing `seed`, as sorted indices.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        let mut seeds: Vec<usize> = seed.iter().copied().filter(|&s| s != 0).collect();
        seeds.sort_unstable();
        seeds.dedup();
        member[0] = true;
        let mut found = vec![0usize];
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &s in &seeds {
                for y in [self.mul(x, s), self.mul(x, self.inv[s])] {
                    if !member[y] {
                        member[y] = true;
                        found.push(y);
                        stack.push(y);
                    }
                }
            }
        }
        found.sort_unstable();
        found
    }
}

/// Orbits of the conjugation action, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}
