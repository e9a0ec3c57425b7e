//! Defining polynomials for the Galois fields `GF(p^k)` with `p^k <= 64`.
//!
//! Entries are the Conway polynomials for each `(p, k)`, coefficients listed
//! from the constant term upwards. Prime fields (`k = 1`) are represented as
//! plain `Z_p` and need no entry.

const TABLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),             // x^2+x+1
    (2, 3, &[1, 1, 0, 1]),          // x^3+x+1
    (2, 4, &[1, 1, 0, 0, 1]),       // x^4+x+1
    (2, 5, &[1, 0, 1, 0, 0, 1]),    // x^5+x^2+1
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]), // x^6+x^4+x^3+x+1
    (3, 2, &[2, 2, 1]),             // x^2+2x+2
    (3, 3, &[1, 2, 0, 1]),          // x^3+2x+1
    (5, 2, &[2, 4, 1]),             // x^2+4x+2
    (7, 2, &[3, 6, 1]),             // x^2+6x+3
];

#[cfg(test)]
fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Splits `q` as `p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn defining_polynomial(p: u64, k: u32) -> Option<&'static [u64]> {
    TABLE
        .iter()
        .find(|(tp, tk, _)| *tp == p && *tk == k)
        .map(|(_, _, poly)| *poly)
}

/// The field order `p^k` when `poly` is the tabulated polynomial for `Z_p`.
pub fn field_order_for(modulus: u64, poly: &[u64]) -> Option<u64> {
    TABLE
        .iter()
        .find(|(p, _, tp)| *p == modulus && *tp == poly)
        .map(|(p, k, _)| p.pow(*k))
}

pub fn tabulated_orders() -> impl Iterator<Item = (u64, u32)> {
    TABLE.iter().map(|(p, k, _)| (*p, *k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(61), Some((61, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn table_covers_every_composite_order_up_to_64() {
        for q in 2..=64u64 {
            if let Some((p, k)) = prime_power(q) {
                if k > 1 {
                    assert!(defining_polynomial(p, k).is_some(), "GF({q})");
                }
            }
        }
        for (p, k) in tabulated_orders() {
            assert!(is_prime(p));
            assert_eq!(defining_polynomial(p, k).unwrap().len(), k as usize + 1);
        }
    }
}
