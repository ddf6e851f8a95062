//! Fully enumerated permutation groups.
//!
//! Elements live in a table sorted lexicographically by image array and are
//! referred to by their index into it; the identity is always index 0. All
//! products, inverses and class data are expressed in terms of those indices.

mod classes;
mod cosets;

use std::collections::{HashMap, HashSet, VecDeque};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use classes::{ConjugacyClass, ConjugacyClasses, CyclicClass};
pub use cosets::CosetAction;

/// Default upper bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 200_000;

type Buf = SmallVec<[u32; 64]>;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Flattened image arrays, `degree` entries per element, sorted.
    points: Vec<u32>,
    index: HashMap<Box<[u32]>, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
}

impl PermGroup {
    /// Enumerates the closure of `gens` by breadth-first search.
    ///
    /// With no generators the result is the trivial group of degree `degree`
    /// (use [`PermGroup::from_generators`] when the degree comes from the
    /// generators themselves).
    pub fn from_generators_with_degree(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        if cap == 0 {
            return Err(Error::CapExceeded { cap });
        }
        let id: Box<[u32]> = (0..degree as u32).collect();
        let mut seen: HashSet<Box<[u32]>> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y: Box<[u32]> = x.iter().map(|&p| g.images()[p as usize]).collect();
                if !seen.contains(&y) {
                    if seen.len() == cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Box<[u32]>> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted(degree, gens.to_vec(), elements))
    }

    /// Enumerates the group generated by `gens`, padding every generator
    /// with fixed points up to the largest degree among them. An empty list
    /// gives the trivial group on one point.
    pub fn from_generators(gens: &[Permutation], cap: usize) -> Result<Self> {
        let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1);
        let gens = gens
            .iter()
            .map(|g| g.extended(degree))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generators_with_degree(degree, &gens, cap)
    }

    fn from_sorted(degree: usize, generators: Vec<Permutation>, elements: Vec<Box<[u32]>>) -> Self {
        let mut points = Vec::with_capacity(elements.len() * degree);
        for e in &elements {
            points.extend_from_slice(e);
        }
        let index: HashMap<Box<[u32]>, usize> = elements
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut group = Self {
            degree,
            generators,
            points,
            index,
            inverses: Vec::new(),
            orders: Vec::new(),
        };
        let n = group.order();
        let mut inverses = vec![0; n];
        let mut orders = vec![0; n];
        let mut buf = Buf::new();
        for x in 0..n {
            let imgs = group.images(x);
            buf.clear();
            buf.resize(degree, 0);
            for (i, &y) in imgs.iter().enumerate() {
                buf[y as usize] = i as u32;
            }
            inverses[x] = group.index[&buf[..]];
            orders[x] = Permutation::from_images_unchecked(imgs.to_vec()).order();
        }
        group.inverses = inverses;
        group.orders = orders;
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// |G|.
    pub fn order(&self) -> usize {
        self.index.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the generators in the element table.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g.images()])
            .collect()
    }

    pub const fn identity(&self) -> usize {
        0
    }

    pub fn images(&self, x: usize) -> &[u32] {
        &self.points[x * self.degree..(x + 1) * self.degree]
    }

    pub fn element(&self, x: usize) -> Permutation {
        Permutation::from_images_unchecked(self.images(x).to_vec())
    }

    pub fn index_of_images(&self, images: &[u32]) -> Option<usize> {
        self.index.get(images).copied()
    }

    /// Looks up a permutation, padding or trimming fixed points to the group
    /// degree.
    pub fn index_of(&self, perm: &Permutation) -> Result<usize> {
        let perm = perm
            .extended(self.degree)
            .map_err(|_| Error::NotAnElement(perm.to_string()))?;
        self.index_of_images(perm.images())
            .ok_or_else(|| Error::NotAnElement(perm.to_string()))
    }

    /// `a ∘ b` (apply `b`, then `a`).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let ia = self.images(a);
        let buf: Buf = self.images(b).iter().map(|&p| ia[p as usize]).collect();
        self.index[&buf[..]]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.orders[x]
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let p = self.element(x).pow(k);
        self.index[p.images()]
    }

    /// `s ∘ x ∘ s⁻¹`.
    pub fn conjugate(&self, x: usize, s: usize) -> usize {
        self.mul(self.mul(s, x), self.inv(s))
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Powers `e, x, x², …` of `x`, in that order.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let o = self.element_order(x) as usize;
        let mut out = Vec::with_capacity(o);
        let mut cur = self.identity();
        for _ in 0..o {
            out.push(cur);
            cur = self.mul(x, cur);
        }
        out
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity()] = true;
        let mut queue = VecDeque::from([self.identity()]);
        let mut out = vec![self.identity()];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the element set `h` is closed under multiplication and
    /// contains the identity.
    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in h {
            match member.get_mut(x) {
                Some(m) => *m = true,
                None => return false,
            }
        }
        if !member[self.identity()] {
            return false;
        }
        // Grow a generating set greedily; the closure must stay inside h.
        let mut gens = Vec::new();
        let mut span = vec![self.identity()];
        let mut in_span = vec![false; self.order()];
        in_span[self.identity()] = true;
        for &x in h {
            if in_span[x] {
                continue;
            }
            gens.push(x);
            span = self.generated_subgroup(&gens);
            if span.len() > h.len() || span.iter().any(|&y| !member[y]) {
                return false;
            }
            for &y in &span {
                in_span[y] = true;
            }
        }
        let distinct = member.iter().filter(|&&m| m).count();
        span.len() == distinct
    }
}
