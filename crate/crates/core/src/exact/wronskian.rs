//! Classical Hermite polynomials and exact Wronskian determinants.

use crate::exact::poly::rat_i64;
use crate::exact::Polynomial;

/// Physicists' Hermite polynomial H_n, from
/// H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.
pub fn classical_hermite(n: u32) -> Polynomial {
    let two_x = Polynomial::from_int_coeffs(&[0, 2]);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&rat_i64(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Wronskian determinant Wr(f_1, ..., f_n): the determinant of the matrix
/// whose (i, j) entry is the i-th derivative of f_j, computed by
/// fraction-free Bareiss elimination so no intermediate rational blow-up
/// occurs.
pub fn wronskian(fs: &[Polynomial]) -> Polynomial {
    assert!(!fs.is_empty(), "Wronskian of an empty family");
    let n = fs.len();
    let mut m: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    let mut row = fs.to_vec();
    m.push(row.clone());
    for _ in 1..n {
        row = row.iter().map(Polynomial::derivative).collect();
        m.push(row.clone());
    }

    let mut sign_flip = false;
    let mut prev_pivot = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .divexact(&prev_pivot)
                    .expect("Bareiss pivot divides exactly");
            }
            m[i][k] = Polynomial::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn hermite_first_few() {
        assert_eq!(classical_hermite(0), Polynomial::one());
        assert_eq!(classical_hermite(1), p(&[0, 2]));
        assert_eq!(classical_hermite(2), p(&[-2, 0, 4]));
        assert_eq!(classical_hermite(3), p(&[0, -12, 0, 8]));
        assert_eq!(classical_hermite(4), p(&[12, 0, -48, 0, 16]));
    }

    #[test]
    fn wronskian_single_entry() {
        assert_eq!(wronskian(&[Polynomial::one()]), Polynomial::one());
    }

    #[test]
    fn wronskian_two_by_two() {
        // Wr(2x, 4x^2 - 2) = 2x * 8x - 2 * (4x^2 - 2) = 8x^2 + 4
        assert_eq!(wronskian(&[p(&[0, 2]), p(&[-2, 0, 4])]), p(&[4, 0, 8]));
    }

    #[test]
    fn wronskian_repeated_column_vanishes() {
        let f = p(&[1, 2, 3]);
        assert!(wronskian(&[f.clone(), f]).is_zero());
    }

    #[test]
    fn wronskian_is_alternating() {
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 3, 0, 1]);
        let c = p(&[2, 1]);
        let w1 = wronskian(&[a.clone(), b.clone(), c.clone()]);
        let w2 = wronskian(&[b, a, c]);
        assert_eq!(w1, -w2);
    }
}
