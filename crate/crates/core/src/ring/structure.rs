//! Idempotents, additive closures and the local-factor decomposition.

use super::{FiniteRing, RingElement};

/// One local factor `R·e` of the ring, seen through its primitive idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactorProfile {
    pub idempotent: RingElement,
    /// `|R·e|`.
    pub factor_size: u64,
    /// Additive order of `e`, which is the characteristic of `R·e`.
    pub factor_char: u64,
    /// `(R·e, +)` is generated by its idempotents, i.e. by `e` alone.
    pub generated_by_idempotents: bool,
    pub is_z2: bool,
    pub is_z3: bool,
}

impl FiniteRing {
    pub fn is_idempotent(&self, x: &RingElement) -> bool {
        self.mul(x, x) == *x
    }

    /// `Id(R)` in enumeration order, by exhaustive scan.
    pub fn idempotents(&self) -> Vec<RingElement> {
        self.elements().filter(|x| self.is_idempotent(x)).collect()
    }

    pub fn idempotent_indices(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&i| self.is_idempotent(&self.element_at(i)))
            .collect()
    }

    /// Smallest `n > 0` with `n·x = 0`.
    pub fn additive_order(&self, x: &RingElement) -> u64 {
        let zero = self.zero();
        let mut acc = x.clone();
        let mut n = 1;
        while acc != zero {
            acc = self.add(&acc, x);
            n += 1;
        }
        n
    }

    /// Additive subgroup generated by `generators`, in enumeration order.
    ///
    /// Breadth-first search from zero, stepping by `+g` and `-g` for each
    /// generator until no new element appears.
    pub fn additive_closure(&self, generators: &[RingElement]) -> Vec<RingElement> {
        let gens: Vec<usize> = generators.iter().map(|g| self.index_of(g)).collect();
        self.closure_indices(&gens)
            .into_iter()
            .map(|i| self.element_at(i))
            .collect()
    }

    pub(crate) fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        seen[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                for y in [self.add_indices(x, g), self.sub_indices(x, g)] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        (0..self.size).filter(|&i| seen[i]).collect()
    }

    /// `(R, +) = <Id(R)>`.
    pub fn generated_by_idempotents(&self) -> bool {
        self.closure_indices(&self.idempotent_indices()).len() == self.size
    }

    pub fn is_local(&self) -> bool {
        self.idempotent_indices().len() == 2
    }

    /// Primitive idempotents with the profile of the local factor each one cuts out.
    ///
    /// The atoms are found by refining the partition `{1}` with every
    /// idempotent `f`: each block `e` splits into `ef` and `e(1-f)`, dropping
    /// zeros. Results are ordered by the enumeration index of the idempotent.
    pub fn primitive_idempotents(&self) -> Vec<LocalFactorProfile> {
        let zero = self.zero();
        let mut blocks = vec![self.one()];
        for f in self.idempotents() {
            blocks = blocks
                .into_iter()
                .flat_map(|e| {
                    let ef = self.mul(&e, &f);
                    let rest = self.sub(&e, &ef);
                    [ef, rest]
                })
                .filter(|b| *b != zero)
                .collect();
        }
        blocks.sort_by_key(|e| self.index_of(e));
        blocks.into_iter().map(|e| self.profile_of(e)).collect()
    }

    fn profile_of(&self, e: RingElement) -> LocalFactorProfile {
        let mut image = vec![false; self.size];
        for x in self.elements() {
            image[self.index_of(&self.mul(&x, &e))] = true;
        }
        let factor_size = image.iter().filter(|&&b| b).count() as u64;
        let factor_char = self.additive_order(&e);
        LocalFactorProfile {
            idempotent: e,
            factor_size,
            factor_char,
            generated_by_idempotents: factor_char == factor_size,
            is_z2: factor_size == 2,
            is_z3: factor_size == 3 && factor_char == 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s).unwrap()
    }

    fn ints(r: &FiniteRing, xs: &[&[u64]]) -> Vec<RingElement> {
        xs.iter().map(|x| r.from_ints(x).unwrap()).collect()
    }

    #[test]
    fn idempotents_of_small_rings() {
        let z4 = ring("Z4");
        assert_eq!(z4.idempotents(), ints(&z4, &[&[0], &[1]]));
        let z6 = ring("Z6");
        assert_eq!(z6.idempotents(), ints(&z6, &[&[0], &[1], &[3], &[4]]));
        let v4 = ring("Z2 * Z2");
        assert_eq!(v4.idempotents().len(), 4);
    }

    #[test]
    fn closures() {
        let z6 = ring("Z6");
        assert_eq!(z6.additive_closure(&z6.idempotents()).len(), 6);
        let gf4 = ring("GF(4)");
        assert_eq!(
            gf4.additive_closure(&[gf4.zero(), gf4.one()]),
            vec![gf4.zero(), gf4.one()]
        );
        let z4 = ring("Z4");
        assert_eq!(z4.additive_closure(&[z4.one()]).len(), 4);
    }

    #[test]
    fn decomposition_of_z6() {
        let z6 = ring("Z6");
        let p = z6.primitive_idempotents();
        assert_eq!(p.len(), 2);
        assert_eq!(p[0].idempotent, z6.from_ints(&[3]).unwrap());
        assert_eq!((p[0].factor_size, p[0].factor_char), (2, 2));
        assert!(p[0].is_z2);
        assert_eq!(p[1].idempotent, z6.from_ints(&[4]).unwrap());
        assert_eq!((p[1].factor_size, p[1].factor_char), (3, 3));
        assert!(p[1].is_z3);
    }

    #[test]
    fn decomposition_of_boolean_square() {
        let r = ring("Z2 * Z2");
        let p = r.primitive_idempotents();
        let ids: Vec<_> = p.iter().map(|x| x.idempotent.clone()).collect();
        assert_eq!(ids, ints(&r, &[&[0, 1], &[1, 0]]));
        assert!(p.iter().all(|x| x.factor_size == 2 && x.factor_char == 2));
    }

    #[test]
    fn local_rings_have_one_atom() {
        let z9 = ring("Z9");
        let p = z9.primitive_idempotents();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].idempotent, z9.one());
        assert_eq!((p[0].factor_size, p[0].factor_char), (9, 9));
        assert!(p[0].generated_by_idempotents);
        assert!(z9.is_local());
        assert!(!ring("Z6").is_local());
        assert!(ring("Z3[x]/(x^2)").is_local());

        let dual = ring("Z3[x]/(x^2)").primitive_idempotents();
        assert_eq!((dual[0].factor_size, dual[0].factor_char), (9, 3));
        assert!(!dual[0].generated_by_idempotents);
    }

    #[test]
    fn additive_order_of_one_is_characteristic() {
        for s in ["Z6", "Z4 * Z6", "GF(9)", "Z8 * Z2[x]/(x^3)"] {
            let r = ring(s);
            assert_eq!(r.additive_order(&r.one()), r.characteristic(), "{s}");
        }
    }
}
