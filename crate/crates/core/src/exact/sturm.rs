//! Exact real-root counting by Sturm sequences.
//!
//! The chain is built from the square-free part, and every element is
//! rescaled to its primitive integer form (a positive scaling, which leaves
//! sign variations untouched) so coefficient growth stays manageable.

use crate::exact::poly::sign;
use crate::exact::Polynomial;

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let square_free = p
        .divexact(&p.gcd(&p.derivative()))
        .expect("gcd divides its argument");
    let mut chain = vec![
        square_free.primitive_part(),
        square_free.derivative().primitive_part(),
    ];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive_part());
    }
    chain
}

/// Sign variations in the chain evaluated at +inf or -inf, read off the
/// leading coefficients (with degree parity for the -inf limit).
fn variations_at_infinity(chain: &[Polynomial], positive_end: bool) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let s = sign(&p.leading());
            if positive_end || p.degree().unwrap() % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a nonzero polynomial, exactly.
pub fn real_root_count(p: &Polynomial) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if p.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(p);
    variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn strictly_positive_polynomial_has_no_roots() {
        // 16x^4 + 12
        assert_eq!(real_root_count(&p(&[12, 0, 0, 0, 16])), 0);
    }

    #[test]
    fn cubic_with_three_roots() {
        // 8x^3 - 12x has roots 0 and +-sqrt(3/2)
        assert_eq!(real_root_count(&p(&[0, -12, 0, 8])), 3);
    }

    #[test]
    fn even_sextic_with_two_roots() {
        // 64x^6 + 96x^4 + 144x^2 - 72: negative at 0, increasing, even
        assert_eq!(real_root_count(&p(&[-72, 0, 144, 0, 96, 0, 64])), 2);
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x - 1)^2 (x + 2)
        let q = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(real_root_count(&q), 2);
    }

    #[test]
    fn constants_and_linears() {
        assert_eq!(real_root_count(&p(&[5])), 0);
        assert_eq!(real_root_count(&p(&[3, 2])), 1);
    }
}
