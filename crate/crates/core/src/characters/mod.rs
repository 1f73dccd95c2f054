//! Character polynomials as sums of tableau weights.

mod laurent;

pub use laurent::{LaurentMonomial, LaurentPoly};

use crate::shape::{Partition, SkewShape};
use crate::tableau::{
    enumerate_semistandard, enumerate_skew_rowstrict, enumerate_spo_tableaux, enumerate_symplectic_tableaux, Alphabet,
    Entry,
};

fn sum_weights<I: IntoIterator<Item = LaurentMonomial>>(nx: usize, ny: usize, monos: I) -> LaurentPoly {
    LaurentPoly::from_monomials(nx, ny, monos).expect("weights share the alphabet")
}

/// Symplectic Schur polynomial in `x_1^{±1}..x_m^{±1}`; zero when the shape
/// has more than `m` rows.
pub fn symplectic_schur(mu: &Partition, m: u32) -> LaurentPoly {
    sum_weights(m as usize, 0, enumerate_symplectic_tableaux(mu, m).map(|t| t.weight()))
}

/// Orthosymplectic character as the weight generating function of
/// spo-tableaux.
pub fn spo_character(lambda: &Partition, a: Alphabet) -> LaurentPoly {
    sum_weights(a.m as usize, a.n as usize, enumerate_spo_tableaux(lambda, a).map(|t| t.weight()))
}

/// Orthosymplectic character through the branching sum over `μ ⊆ λ` with at
/// most `m` rows of `sp_μ(x) · s_{λᵗ/μᵗ}(y)`. The skew Schur factor is read
/// off row-strict fillings of `λ/μ`, which are transposes of semistandard
/// fillings of `λᵗ/μᵗ`.
pub fn spo_character_branching(lambda: &Partition, a: Alphabet) -> LaurentPoly {
    let (nx, ny) = (a.m as usize, a.n as usize);
    let mut total = LaurentPoly::zero(nx, ny);
    for mu in lambda.subpartitions() {
        if mu.length() > a.m as usize {
            continue;
        }
        let sp = sum_weights(nx, ny, enumerate_symplectic_tableaux(&mu, a.m).map(|t| lift(&t.weight(), nx, ny)));
        if sp.is_zero() {
            continue;
        }
        let skew = SkewShape::new(lambda.clone(), mu).expect("subpartition");
        let s = sum_weights(nx, ny, enumerate_skew_rowstrict(&skew, a.n).map(|f| f.weight(a)));
        total = &total + &(&sp * &s);
    }
    total
}

fn lift(m: &LaurentMonomial, nx: usize, ny: usize) -> LaurentMonomial {
    let mut out = LaurentMonomial::one(nx, ny);
    out.x[..m.x.len()].copy_from_slice(&m.x);
    out.y[..m.y.len()].copy_from_slice(&m.y);
    out
}

/// Ordinary Schur polynomial `s_λ(y_1..y_n)`.
pub fn schur(lambda: &Partition, n_vars: u32) -> LaurentPoly {
    sum_weights(
        0,
        n_vars as usize,
        enumerate_semistandard(lambda, n_vars).map(|rows| {
            let mut w = LaurentMonomial::one(0, n_vars as usize);
            for e in rows.iter().flatten() {
                if let Entry::Circled(j) = e {
                    w.y[*j as usize - 1] += 1;
                }
            }
            w
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn mono(x: &[i32], y: &[u32]) -> LaurentMonomial {
        LaurentMonomial {
            x: x.to_vec(),
            y: y.to_vec(),
        }
    }

    fn poly(nx: usize, ny: usize, terms: &[(&[i32], &[u32])]) -> LaurentPoly {
        LaurentPoly::from_monomials(nx, ny, terms.iter().map(|(x, y)| mono(x, y))).unwrap()
    }

    #[test]
    fn symplectic_schur_examples() {
        assert_eq!(symplectic_schur(&partition![1], 1), poly(1, 0, &[(&[1], &[]), (&[-1], &[])]));
        assert_eq!(
            symplectic_schur(&partition![1, 1], 2),
            poly(2, 0, &[(&[1, 1], &[]), (&[1, -1], &[]), (&[-1, 1], &[]), (&[-1, -1], &[]), (&[0, 0], &[])])
        );
        assert!(symplectic_schur(&partition![1, 1, 1], 2).is_zero());
    }

    #[test]
    fn spo_character_examples() {
        let a = Alphabet::new(1, 1).unwrap();
        assert_eq!(
            spo_character(&partition![1], a),
            poly(1, 1, &[(&[1], &[0]), (&[-1], &[0]), (&[0], &[1])])
        );
        let a = Alphabet::new(1, 0).unwrap();
        assert!(spo_character(&partition![1, 1], a).is_zero());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&partition![1], 2), poly(0, 2, &[(&[], &[1, 0]), (&[], &[0, 1])]));
        assert_eq!(
            schur(&partition![2], 2),
            poly(0, 2, &[(&[], &[2, 0]), (&[], &[1, 1]), (&[], &[0, 2])])
        );
        let s21 = schur(&partition![2, 1], 3);
        assert_eq!(s21.coefficient_sum(), 8.into());
        assert_eq!(s21.coeff(&mono(&[], &[1, 1, 1])), 2.into());
        assert_eq!(s21.num_terms(), 7);
    }

    #[test]
    fn square_of_single_box_matches_tableau_pairs() {
        let a = Alphabet::new(2, 1).unwrap();
        let p = spo_character(&partition![1], a);
        let sq = &p * &p;
        // Independent route: weights of all ordered pairs of single letters.
        let pairs = a
            .letters()
            .into_iter()
            .flat_map(|e| a.letters().into_iter().map(move |f| e.weight(a).checked_mul(&f.weight(a)).unwrap()));
        assert_eq!(sq, LaurentPoly::from_monomials(2, 1, pairs).unwrap());
        assert_eq!(sq.num_terms(), 14);
    }

    #[test]
    fn branching_agrees_with_tableaux() {
        for (m, n) in [(1, 1), (2, 1), (2, 2)] {
            let a = Alphabet::new(m, n).unwrap();
            for lambda in [partition![], partition![1], partition![2, 1], partition![1, 1, 1], partition![2, 2]] {
                assert_eq!(spo_character(&lambda, a), spo_character_branching(&lambda, a), "{lambda} m={m} n={n}");
            }
        }
    }

    #[test]
    fn no_odd_letters_gives_symplectic_schur() {
        for m in 1..=3 {
            let a = Alphabet::new(m, 0).unwrap();
            for lambda in [partition![1], partition![2, 1], partition![1, 1, 1], partition![3, 1]] {
                let expected = if lambda.length() <= m as usize {
                    symplectic_schur(&lambda, m)
                } else {
                    LaurentPoly::zero(m as usize, 0)
                };
                assert_eq!(spo_character(&lambda, a), expected);
                assert_eq!(spo_character_branching(&lambda, a), expected);
            }
        }
    }
}
