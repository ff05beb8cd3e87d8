//! The finite ring `F₃^m` as a stand-in for `C(X) = ℝ^m` on a discrete
//! space of `m` points.
//!
//! Cozero sets, zero sets, annihilators and the ideal lattice depend only
//! on which coordinates vanish, so statements about `O`, `I` and `Ann` can
//! be checked here on actual ring elements. `F₃` has two nonzero values,
//! which gives distinct elements with equal cozero sets. Ideals are
//! computed by closing generator sets under addition and ring
//! multiplication, not assumed to be coordinate ideals.

use crate::PointSet;

/// Largest `m` supported (`3^5 = 243` elements).
pub const MAX_RING_POINTS: usize = 5;

/// Elements are indices `0..3^m`; coordinate `i` is base-3 digit `i`.
pub type Elem = usize;

/// An ideal as a sorted list of its elements.
pub type Ideal = Vec<Elem>;

#[derive(Clone, Debug)]
pub struct ProductField {
    m: usize,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    coz: Vec<PointSet>,
}

impl ProductField {
    /// `None` when `m` exceeds [`MAX_RING_POINTS`].
    pub fn new(m: usize) -> Option<Self> {
        if m > MAX_RING_POINTS {
            return None;
        }
        let size = 3usize.pow(m as u32);
        let digits: Vec<Vec<usize>> = (0..size)
            .map(|e| (0..m).map(|i| e / 3usize.pow(i as u32) % 3).collect())
            .collect();
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * 3 + x);
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                let s: Vec<usize> = (0..m).map(|i| (digits[a][i] + digits[b][i]) % 3).collect();
                let p: Vec<usize> = (0..m).map(|i| digits[a][i] * digits[b][i] % 3).collect();
                add[a * size + b] = encode(&s) as u16;
                mul[a * size + b] = encode(&p) as u16;
            }
        }
        let coz = digits
            .iter()
            .map(|d| PointSet::from_points((0..m).filter(|&i| d[i] != 0)))
            .collect();
        Some(ProductField { m, size, add, mul, coz })
    }

    pub fn points(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    /// Points where `f` does not vanish.
    pub fn coz(&self, f: Elem) -> PointSet {
        self.coz[f]
    }

    pub fn zero_set(&self, f: Elem) -> PointSet {
        self.coz[f].complement(self.m)
    }

    /// `O(S)`, the union of cozero sets.
    pub fn o_of(&self, s: &[Elem]) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, &f| acc.union(self.coz(f)))
    }

    /// `I(U) = {f : U ⊆ Z(f)}`.
    pub fn i_of(&self, u: PointSet) -> Ideal {
        self.elements().filter(|&f| self.coz(f).is_disjoint(u)).collect()
    }

    /// `Ann(S) = {g : gf = 0 for all f ∈ S}`.
    pub fn ann(&self, s: &[Elem]) -> Ideal {
        self.elements()
            .filter(|&g| s.iter().all(|&f| self.mul(g, f) == 0))
            .collect()
    }

    /// The ideal generated by `s`: closure under addition and under
    /// multiplication by arbitrary ring elements.
    pub fn generate(&self, s: &[Elem]) -> Ideal {
        let mut member = vec![false; self.size];
        let mut list = Vec::new();
        let mut queue = vec![0];
        queue.extend_from_slice(s);
        while let Some(x) = queue.pop() {
            if member[x] {
                continue;
            }
            member[x] = true;
            list.push(x);
            for r in self.elements() {
                let y = self.mul(r, x);
                if !member[y] {
                    queue.push(y);
                }
            }
            for &y in &list {
                let z = self.add(x, y);
                if !member[z] {
                    queue.push(z);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// The distinct principal ideals, in ascending order of their member
    /// lists. In a finite product of fields these are all the ideals.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut all: Vec<Ideal> = self.elements().map(|f| self.generate(&[f])).collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn sum(&self, i: &[Elem], j: &[Elem]) -> Ideal {
        let mut gens = i.to_vec();
        gens.extend_from_slice(j);
        self.generate(&gens)
    }

    /// `IJ`, generated by all products.
    pub fn product(&self, i: &[Elem], j: &[Elem]) -> Ideal {
        let mut products: Vec<Elem> = i
            .iter()
            .flat_map(|&a| j.iter().map(move |&b| self.mul(a, b)))
            .collect();
        products.sort_unstable();
        products.dedup();
        self.generate(&products)
    }

    pub fn intersection(&self, i: &[Elem], j: &[Elem]) -> Ideal {
        i.iter().copied().filter(|x| j.binary_search(x).is_ok()).collect()
    }

    pub fn is_zero_ideal(&self, i: &[Elem]) -> bool {
        i == [0]
    }

    pub fn is_whole_ring(&self, i: &[Elem]) -> bool {
        i.len() == self.size
    }

    /// No point where every member vanishes.
    pub fn is_free(&self, i: &[Elem]) -> bool {
        let common = i
            .iter()
            .fold(PointSet::full(self.m), |acc, &f| acc.intersection(self.zero_set(f)));
        common.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_lattice_has_two_to_the_m_members() {
        for m in 1..=4 {
            let r = ProductField::new(m).unwrap();
            assert_eq!(r.ideals().len(), 1 << m);
        }
        assert!(ProductField::new(MAX_RING_POINTS + 1).is_none());
    }

    #[test]
    fn arithmetic() {
        let r = ProductField::new(2).unwrap();
        // element 1 = (1, 0), element 3 = (0, 1), element 2 = (2, 0)
        assert_eq!(r.mul(1, 3), 0);
        assert_eq!(r.add(1, 1), 2);
        assert_eq!(r.add(2, 1), 0);
        assert_eq!(r.coz(4), PointSet::full(2));
        assert_eq!(r.generate(&[4]).len(), 9);
        assert_eq!(r.generate(&[1]), vec![0, 1, 2]);
        assert_eq!(r.ann(&[1]), vec![0, 3, 6]);
        assert!(r.is_zero_ideal(&r.product(&[0, 1, 2], &[0, 3, 6])));
    }

    #[test]
    fn subset_intersection_can_lose_support() {
        let r = ProductField::new(1).unwrap();
        let (s1, s2) = (vec![1], vec![2]);
        let both: Vec<Elem> = s1.iter().copied().filter(|x| s2.contains(x)).collect();
        assert_eq!(r.o_of(&both), PointSet::EMPTY);
        assert_eq!(r.o_of(&s1).intersection(r.o_of(&s2)), PointSet::full(1));
    }
}
