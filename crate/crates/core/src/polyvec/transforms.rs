//! f/h/γ vectors, `C(n,i,x)`, the toric g-contribution polynomials and peak polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::error::{Error, Result};
use crate::words::{binomial, catalan};

fn big(v: usize) -> i64 {
    v as i64
}

/// `Σ h_i x^i = Σ f_i (x-1)^i`; the output has the input's length.
pub fn f_to_h(f: &[BigInt]) -> Vec<BigInt> {
    let p = IntPoly::new(f.to_vec()).shift(-1);
    (0..f.len()).map(|k| p.coeff(k)).collect()
}

/// Inverse of [`f_to_h`], by the substitution `x -> x + 1`.
pub fn h_to_f(h: &[BigInt]) -> Vec<BigInt> {
    let p = IntPoly::new(h.to_vec()).shift(1);
    (0..h.len()).map(|k| p.coeff(k)).collect()
}

pub fn is_palindromic(h: &[BigInt]) -> bool {
    h.iter().eq(h.iter().rev())
}

fn require_palindromic(h: &[BigInt]) -> Result<()> {
    if h.is_empty() || !is_palindromic(h) {
        Err(Error::NotPalindromic(
            h.iter().map(ToString::to_string).collect(),
        ))
    } else {
        Ok(())
    }
}

/// The γ-vector: `Σ h_i x^i = Σ γ_j x^j (1+x)^{n-2j}` with `n = h.len() - 1`.
pub fn h_to_gamma(h: &[BigInt]) -> Result<Vec<BigInt>> {
    require_palindromic(h)?;
    let n = h.len() - 1;
    let mut gamma: Vec<BigInt> = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let mut g = h[i].clone();
        for (j, gj) in gamma.iter().enumerate() {
            g -= binomial(big(n - 2 * j), big(i - j)) * gj;
        }
        gamma.push(g);
    }
    Ok(gamma)
}

/// Inverse of [`h_to_gamma`] for dimension `n`; missing entries of `gamma` count as zero.
pub fn gamma_to_h(n: usize, gamma: &[BigInt]) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); n + 1];
    for (j, gj) in gamma.iter().enumerate().take(n / 2 + 1) {
        for (k, hk) in h.iter_mut().enumerate().skip(j).take(n - 2 * j + 1) {
            *hk += binomial(big(n - 2 * j), big(k - j)) * gj;
        }
    }
    h
}

/// `f`, `h` and `γ` of an `n`-dimensional simple polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FhgVectors {
    pub dimension: usize,
    pub f: Vec<BigInt>,
    pub h: Vec<BigInt>,
    pub gamma: Vec<BigInt>,
}

impl FhgVectors {
    pub fn from_h(h: Vec<BigInt>) -> Result<Self> {
        let gamma = h_to_gamma(&h)?;
        Ok(FhgVectors {
            dimension: h.len() - 1,
            f: h_to_f(&h),
            h,
            gamma,
        })
    }

    pub fn from_f(f: Vec<BigInt>) -> Result<Self> {
        FhgVectors::from_h(f_to_h(&f))
    }

    pub fn from_gamma(n: usize, gamma: &[BigInt]) -> Self {
        let h = gamma_to_h(n, gamma);
        FhgVectors::from_h(h).expect("h built from a γ-vector is palindromic")
    }
}

/// `C(n,i,x)`, the peak enumerator of nonnegative paths from `(0,0)` to `(n, n-2i)`.
pub fn cnix(n: usize, i: usize) -> Result<IntPoly> {
    if 2 * i > n {
        return Err(Error::OutOfRange {
            what: "i",
            value: big(i),
            bound: format!("0 <= i <= {}", n / 2),
        });
    }
    if i == 0 {
        return Ok(IntPoly::one());
    }
    let (n, i) = (big(n), big(i));
    let mut coeffs = vec![BigInt::zero(); i as usize + 1];
    for k in 1..=i {
        let num = BigInt::from(n + 1 - 2 * i) * binomial(n - i, k - 1) * binomial(i - 1, k - 1);
        let (q, r) = num.div_rem(&BigInt::from(k));
        assert!(
            r.is_zero(),
            "C({n},{i},x) has a non-integral coefficient at x^{k}"
        );
        coeffs[k as usize] = q;
    }
    Ok(IntPoly::new(coeffs))
}

/// `g_{n,j}(x) = Σ_k C_{n-k-j} binom(n-k,k) (x-1)^k`, zero when `j > n`.
pub fn g_contrib(n: usize, j: usize) -> IntPoly {
    if j > n {
        return IntPoly::zero();
    }
    let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    (0..=(n / 2).min(n - j))
        .map(|k| {
            let c = catalan((n - k - j) as u32) * binomial(big(n - k), big(k));
            x_minus_1.pow(k as u32).scale(&c)
        })
        .sum()
}

/// `Σ_j γ_j g_{n,j}(x)`.
pub fn toric_g_from_gamma(n: usize, gamma: &[BigInt]) -> IntPoly {
    gamma
        .iter()
        .enumerate()
        .filter(|(_, gj)| !gj.is_zero())
        .map(|(j, gj)| g_contrib(n, j).scale(gj))
        .sum()
}

/// `h_0 + Σ_{i=1}^{⌊n/2⌋} (h_i - h_{i-1}) C(n,i,x)`.
pub fn toric_g_hetyei(h: &[BigInt]) -> Result<IntPoly> {
    require_palindromic(h)?;
    let n = h.len() - 1;
    let mut g = IntPoly::constant(h[0].clone());
    for i in 1..=n / 2 {
        let diff = &h[i] - &h[i - 1];
        g = &g + &cnix(n, i)?.scale(&diff);
    }
    Ok(g)
}

/// `N_k(x) = (1/k) Σ_j binom(k,j) binom(k,j-1) x^j`, with `N_0(x) = x`.
pub fn narayana(k: usize) -> IntPoly {
    if k == 0 {
        return IntPoly::x();
    }
    let k = big(k);
    IntPoly::new(
        (0..=k)
            .map(|j| {
                let (q, r) = (binomial(k, j) * binomial(k, j - 1)).div_rem(&BigInt::from(k));
                assert!(r.is_zero());
                q
            })
            .collect(),
    )
}

/// Peak polynomials `p_{n,m}(x)` for `n <= max_n`, `0 <= m <= 2n`, filled by the
/// two-sum recurrence.
#[derive(Debug, Clone)]
pub struct PeakTable {
    rows: Vec<Vec<IntPoly>>,
}

impl PeakTable {
    pub fn new(max_n: usize) -> Self {
        let narayana: Vec<IntPoly> = (0..=max_n).map(narayana).collect();
        let catalans: Vec<BigInt> = (0..=max_n as u32).map(catalan).collect();
        let mut rows: Vec<Vec<IntPoly>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![IntPoly::constant(catalans[n].clone())];
            for m in 1..=2 * n {
                let mut p = IntPoly::zero();
                if m >= 2 {
                    for k in 0..=(m - 2) / 2 {
                        p = &p + &(&narayana[k] * &rows[n - k - 1][m - 2 * k - 2]);
                    }
                }
                for k in m / 2..n {
                    p = &p + &rows[k][m - 1].scale(&catalans[n - k - 1]);
                }
                row.push(p);
            }
            rows.push(row);
        }
        PeakTable { rows }
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.rows
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, m: usize) -> Result<&IntPoly> {
        if n > self.max_n() {
            return Err(Error::OutOfRange {
                what: "n",
                value: big(n),
                bound: format!("n <= {}", self.max_n()),
            });
        }
        self.rows[n].get(m).ok_or_else(|| Error::OutOfRange {
            what: "m",
            value: big(m),
            bound: format!("0 <= m <= {}", 2 * n),
        })
    }
}

/// `p_{n,m}(x)`: Dyck words of semilength `n` weighted by `x` per peak lying
/// within the first `m` letters.
pub fn peak_poly(n: usize, m: usize) -> Result<IntPoly> {
    if m > 2 * n {
        return Err(Error::OutOfRange {
            what: "m",
            value: big(m),
            bound: format!("0 <= m <= {}", 2 * n),
        });
    }
    PeakTable::new(n).get(n, m).cloned()
}

#[cfg(test)]
pub(crate) fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_words, Word, WordClass};
    use num_traits::One;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn f_h_examples() {
        assert_eq!(f_to_h(&ints(&[4, 4, 1])), ints(&[1, 2, 1]));
        assert_eq!(f_to_h(&ints(&[4, 6, 4, 1])), ints(&[1, 1, 1, 1]));
        assert_eq!(h_to_f(&ints(&[1, 2, 1])), ints(&[4, 4, 1]));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(h_to_gamma(&ints(&[1, 1])).unwrap(), ints(&[1]));
        assert_eq!(h_to_gamma(&ints(&[1, 4, 1])).unwrap(), ints(&[1, 2]));
        assert_eq!(h_to_gamma(&ints(&[1, 11, 11, 1])).unwrap(), ints(&[1, 8]));
        assert_eq!(gamma_to_h(3, &ints(&[1, 8])), ints(&[1, 11, 11, 1]));
        assert!(matches!(
            h_to_gamma(&ints(&[1, 2, 3])),
            Err(Error::NotPalindromic(_))
        ));
        let v = FhgVectors::from_gamma(4, &ints(&[1, 22, 16]));
        assert_eq!(v.h, ints(&[1, 26, 66, 26, 1]));
        assert_eq!(FhgVectors::from_f(v.f.clone()).unwrap(), v);
    }

    fn peaks(w: &Word, within: usize) -> usize {
        (0..w.len().saturating_sub(1))
            .filter(|&i| i + 1 < within && !w.is_down(i) && w.is_down(i + 1))
            .count()
    }

    #[test]
    fn cnix_matches_path_enumeration() {
        assert_eq!(cnix(4, 2).unwrap(), p(&[0, 1, 1]));
        assert_eq!(cnix(7, 0).unwrap(), IntPoly::one());
        assert!(cnix(4, 3).is_err());
        for n in 0..=10 {
            for i in 0..=n / 2 {
                let mut hist = vec![0i64; n + 1];
                for w in enumerate_words(WordClass::Nonneg {
                    steps: n,
                    height: n - 2 * i,
                }) {
                    hist[peaks(&w, usize::MAX)] += 1;
                }
                assert_eq!(cnix(n, i).unwrap(), p(&hist), "C({n},{i},x)");
            }
        }
    }

    #[test]
    fn g_contrib_examples() {
        assert_eq!(g_contrib(2, 1), p(&[0, 1]));
        assert_eq!(g_contrib(4, 0), p(&[1, 11, 2]));
        assert_eq!(g_contrib(4, 1), p(&[0, 4, 1]));
        assert_eq!(g_contrib(4, 2), p(&[0, 1, 1]));
        assert_eq!(g_contrib(3, 4), IntPoly::zero());
        for n in 0..=12 {
            let g = g_contrib(n, 0);
            assert_eq!(g.eval(&BigInt::one()), catalan(n as u32));
            assert_eq!(g.eval(&BigInt::zero()), BigInt::one());
        }
    }

    #[test]
    fn g_contrib_counts_early_peaks() {
        for n in 0..=9 {
            for j in 0..=n / 2 {
                let mut hist = vec![0i64; n + 1];
                for w in enumerate_words(WordClass::Dyck(n - j)) {
                    hist[peaks(&w, n)] += 1;
                }
                assert_eq!(g_contrib(n, j), p(&hist), "g_({n},{j})");
            }
        }
    }

    #[test]
    fn toric_g_routes() {
        assert_eq!(toric_g_from_gamma(4, &ints(&[1, 6, 2])), p(&[1, 37, 10]));
        assert_eq!(toric_g_from_gamma(4, &ints(&[1, 12, 6])), p(&[1, 65, 20]));
        assert_eq!(toric_g_from_gamma(4, &ints(&[1, 22, 16])), p(&[1, 115, 40]));
        assert_eq!(toric_g_hetyei(&ints(&[1, 1, 1])).unwrap(), IntPoly::one());
        assert_eq!(
            toric_g_hetyei(&ints(&[1, 26, 66, 26, 1])).unwrap(),
            p(&[1, 115, 40])
        );
        assert_eq!(toric_g_hetyei(&ints(&[1, 4, 1])).unwrap(), p(&[1, 3]));
        assert!(toric_g_hetyei(&ints(&[1, 4, 2])).is_err());
    }

    #[test]
    fn narayana_polynomials() {
        assert_eq!(narayana(0), p(&[0, 1]));
        assert_eq!(narayana(2), p(&[0, 1, 1]));
        assert_eq!(narayana(3), p(&[0, 1, 3, 1]));
        for k in 1..=10 {
            assert_eq!(narayana(k).eval(&BigInt::one()), catalan(k as u32));
        }
    }

    #[test]
    fn peak_recurrence_matches_brute_force() {
        let table = PeakTable::new(8);
        for n in 0..=8 {
            assert_eq!(
                table.get(n, 0).unwrap(),
                &IntPoly::constant(catalan(n as u32))
            );
            let words: Vec<Word> = enumerate_words(WordClass::Dyck(n)).collect();
            for m in 0..=2 * n {
                let mut hist = vec![0i64; n + 1];
                for w in &words {
                    hist[peaks(w, m)] += 1;
                }
                assert_eq!(table.get(n, m).unwrap(), &p(&hist), "p_({n},{m})");
            }
            assert!(table.get(n, 2 * n + 1).is_err());
        }
        assert_eq!(peak_poly(1, 2).unwrap(), p(&[0, 1]));
        assert!(peak_poly(1, 3).is_err());
    }

    #[test]
    fn g_contrib_is_a_peak_polynomial() {
        let table = PeakTable::new(10);
        for n in 0..=10 {
            for j in 0..=n / 2 {
                assert_eq!(
                    table.get(n - j, n).unwrap(),
                    &g_contrib(n, j),
                    "n={n} j={j}"
                );
            }
        }
    }
}
