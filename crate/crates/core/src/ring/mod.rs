//! Finite commutative rings presented as products of `Z_n[x]/(f)` factors.

pub mod gf;
pub mod spec;
mod structure;

use std::fmt;

pub use spec::{FactorSpec, RingSpec, SpecError};
pub use structure::LocalFactorProfile;

/// Default cap on the number of ring elements.
pub const DEFAULT_SIZE_BOUND: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring has {size} elements, exceeding the bound of {bound}")]
    TooLarge { size: u64, bound: usize },
    #[error("malformed element for ring {ring}: {reason}")]
    MalformedElement { ring: String, reason: String },
}

/// An element as one coefficient vector per factor.
///
/// Coefficients are always reduced, so equality is coordinate-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coords: Vec<Vec<u64>>,
}

impl RingElement {
    pub fn coords(&self) -> &[Vec<u64>] {
        &self.coords
    }
}

/// A finite commutative ring with unity.
///
/// Elements are enumerated lexicographically over their coefficient tuples,
/// factor-major, so index 0 is zero and the last factor's top coefficient
/// varies fastest.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    spec: RingSpec,
    size: usize,
    characteristic: u64,
    /// Modulus of every flattened coefficient slot.
    radices: Vec<u64>,
    /// Place value of every flattened coefficient slot in the element index.
    weights: Vec<usize>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FiniteRing {
    pub fn new(spec: RingSpec) -> Result<Self, RingError> {
        Self::with_bound(spec, DEFAULT_SIZE_BOUND)
    }

    pub fn with_bound(spec: RingSpec, bound: usize) -> Result<Self, RingError> {
        let size = spec.factors.iter().fold(1u64, |acc, f| {
            acc.saturating_mul(f.size().unwrap_or(u64::MAX))
        });
        if size > bound as u64 {
            return Err(RingError::TooLarge { size, bound });
        }
        let radices: Vec<u64> = spec
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.modulus, f.degree()))
            .collect();
        let mut weights = vec![1usize; radices.len()];
        for i in (0..radices.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * radices[i + 1] as usize;
        }
        let characteristic = spec
            .factors
            .iter()
            .fold(1u64, |acc, f| acc / gcd(acc, f.modulus) * f.modulus);
        Ok(FiniteRing {
            spec,
            size: size as usize,
            characteristic,
            radices,
            weights,
        })
    }

    pub fn parse(text: &str) -> Result<Self, BuildError> {
        Ok(Self::new(RingSpec::parse(text)?)?)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `lcm` of the factor moduli.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: self
                .spec
                .factors
                .iter()
                .map(|f| vec![0; f.degree()])
                .collect(),
        }
    }

    pub fn one(&self) -> RingElement {
        let mut e = self.zero();
        for (c, f) in e.coords.iter_mut().zip(&self.spec.factors) {
            c[0] = 1 % f.modulus;
        }
        e
    }

    /// Builds an element from raw coefficients, reducing each one.
    pub fn element(&self, coords: Vec<Vec<u64>>) -> Result<RingElement, RingError> {
        let malformed = |reason: String| RingError::MalformedElement {
            ring: self.spec.to_string(),
            reason,
        };
        if coords.len() != self.spec.factors.len() {
            return Err(malformed(format!(
                "expected {} factors, got {}",
                self.spec.factors.len(),
                coords.len()
            )));
        }
        let mut coords = coords;
        for (i, (c, f)) in coords.iter_mut().zip(&self.spec.factors).enumerate() {
            if c.len() != f.degree() {
                return Err(malformed(format!(
                    "factor {i} needs {} coefficients, got {}",
                    f.degree(),
                    c.len()
                )));
            }
            c.iter_mut().for_each(|v| *v %= f.modulus);
        }
        Ok(RingElement { coords })
    }

    /// Convenience for rings whose factors are all plain `Z_n`.
    pub fn from_ints(&self, values: &[u64]) -> Result<RingElement, RingError> {
        self.element(values.iter().map(|&v| vec![v]).collect())
    }

    /// `k · 1`.
    pub fn scalar(&self, k: u64) -> RingElement {
        let mut e = self.zero();
        for (c, f) in e.coords.iter_mut().zip(&self.spec.factors) {
            c[0] = k % f.modulus;
        }
        e
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.zip_coeffs(x, y, |a, b, n| (a + b) % n)
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.zip_coeffs(x, y, |a, b, n| (a + n - b) % n)
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        self.sub(&self.zero(), x)
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let coords = self
            .spec
            .factors
            .iter()
            .zip(x.coords.iter().zip(&y.coords))
            .map(|(f, (a, b))| mul_in_factor(f, a, b))
            .collect();
        RingElement { coords }
    }

    fn zip_coeffs(
        &self,
        x: &RingElement,
        y: &RingElement,
        op: impl Fn(u64, u64, u64) -> u64,
    ) -> RingElement {
        let coords = self
            .spec
            .factors
            .iter()
            .zip(x.coords.iter().zip(&y.coords))
            .map(|(f, (a, b))| {
                a.iter()
                    .zip(b)
                    .map(|(&a, &b)| op(a, b, f.modulus))
                    .collect()
            })
            .collect();
        RingElement { coords }
    }

    /// Position of `x` in the enumeration order.
    pub fn index_of(&self, x: &RingElement) -> usize {
        x.coords
            .iter()
            .flatten()
            .zip(&self.weights)
            .map(|(&c, &w)| c as usize * w)
            .sum()
    }

    /// The element at position `index` of the enumeration order.
    pub fn element_at(&self, index: usize) -> RingElement {
        debug_assert!(index < self.size);
        let mut rest = index;
        let mut flat = self.radices.iter().zip(&self.weights).map(|(&r, &w)| {
            let digit = rest / w;
            rest -= digit * w;
            debug_assert!((digit as u64) < r);
            digit as u64
        });
        let coords = self
            .spec
            .factors
            .iter()
            .map(|f| (&mut flat).take(f.degree()).collect())
            .collect();
        RingElement { coords }
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(|i| self.element_at(i))
    }

    /// Index of `element_at(a) + element_at(b)` without materializing elements.
    pub fn add_indices(&self, a: usize, b: usize) -> usize {
        self.digitwise(a, b, |x, y, n| (x + y) % n)
    }

    /// Index of `element_at(a) - element_at(b)`.
    pub fn sub_indices(&self, a: usize, b: usize) -> usize {
        self.digitwise(a, b, |x, y, n| (x + n - y) % n)
    }

    fn digitwise(&self, a: usize, b: usize, op: impl Fn(u64, u64, u64) -> u64) -> usize {
        let (mut ra, mut rb, mut out) = (a, b, 0usize);
        for (&r, &w) in self.radices.iter().zip(&self.weights) {
            let (da, db) = (ra / w, rb / w);
            ra -= da * w;
            rb -= db * w;
            out += op(da as u64, db as u64, r) as usize * w;
        }
        out
    }

    /// Human-readable element: `3`, `2x+1`, or `(2x+1, 1)` for products.
    pub fn format_element(&self, x: &RingElement) -> String {
        let parts: Vec<String> = self
            .spec
            .factors
            .iter()
            .zip(&x.coords)
            .map(|(f, c)| {
                if f.poly.is_empty() {
                    c[0].to_string()
                } else {
                    spec::format_poly(c)
                }
            })
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().map(|e| self.format_element(&e)).collect()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Product in `Z_n[x]/(f)`: schoolbook multiplication, then reduction of the
/// high coefficients by the monic modulus polynomial.
fn mul_in_factor(factor: &FactorSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = factor.modulus;
    if factor.poly.is_empty() {
        return vec![(a[0] * b[0]) % n];
    }
    let d = factor.degree();
    let mut prod = vec![0u64; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % n;
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // x^k = x^(k-d) * x^d and x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1}).
        for (t, &ft) in factor.poly[..d].iter().enumerate() {
            let idx = k - d + t;
            prod[idx] = (prod[idx] + n - (c * ft) % n) % n;
        }
        prod[k] = 0;
    }
    prod.truncate(d);
    prod
}

/// Either failure from going text -> ring.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
