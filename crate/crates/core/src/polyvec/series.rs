//! Truncated multivariate power series, and the functional equations satisfied by
//! the generating functions of `g_{n,j}` and `p_{n,m}`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::IntPoly;
use super::transforms::{g_contrib, narayana, PeakTable};
use crate::words::catalan;

/// A power series in named variables, truncated at a weighted total degree.
/// Variables of weight zero (the `x` that polynomial coefficients live in) are
/// kept exactly; a term survives iff its weighted degree is at most `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    vars: Vec<&'static str>,
    weights: Vec<u32>,
    order: u32,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncSeries {
    pub fn zero(vars: &[&'static str], weights: &[u32], order: u32) -> Self {
        assert_eq!(vars.len(), weights.len());
        TruncSeries {
            vars: vars.to_vec(),
            weights: weights.to_vec(),
            order,
            terms: BTreeMap::new(),
        }
    }

    /// A series in the same ring as `self`.
    pub fn like(&self) -> Self {
        TruncSeries::zero(&self.vars, &self.weights, self.order)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn vars(&self) -> &[&'static str] {
        &self.vars
    }

    fn weight(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Adds `c` times the monomial with exponents `exps`, dropping it beyond the order.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() || self.weight(&exps) > self.order {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Adds `p(x) * m` where `x` is variable `var` and `m` has exponents `exps`.
    pub fn add_poly(&mut self, var: usize, p: &IntPoly, exps: &[u32]) {
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = exps.to_vec();
            e[var] += k as u32;
            self.add_term(e, c.clone());
        }
    }

    pub fn one_like(&self) -> Self {
        let mut s = self.like();
        s.add_term(vec![0; self.vars.len()], BigInt::one());
        s
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.one_like(), |acc, _| &acc * self)
    }

    /// `x1^2 t^3` style rendering of an exponent tuple.
    pub fn monomial_name(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// The smallest monomial (in exponent order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<u32>, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<&Vec<u32>> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coefficient(k), other.coefficient(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.vars == other.vars && self.weights == other.weights && self.order == other.order,
            "series from different rings"
        );
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_ring(rhs);
        let mut out = self.like();
        for (ka, va) in &self.terms {
            let wa = self.weight(ka);
            for (kb, vb) in &rhs.terms {
                if wa + self.weight(kb) > self.order {
                    continue;
                }
                let k = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(k, va * vb);
            }
        }
        out
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCheck {
    pub name: String,
    pub passed: bool,
    /// The first offending coefficient, when the check failed.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub order: u32,
    pub checks: Vec<SeriesCheck>,
}

impl SeriesReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn compare_series(name: &str, lhs: &TruncSeries, rhs: &TruncSeries) -> SeriesCheck {
    let detail = lhs.first_difference(rhs).map(|(k, a, b)| {
        format!(
            "coefficient of {}: left {a}, right {b}",
            lhs.monomial_name(&k)
        )
    });
    SeriesCheck {
        name: name.to_string(),
        passed: detail.is_none(),
        detail,
    }
}

fn compare_polys(name: &str, label: &str, lhs: &IntPoly, rhs: &IntPoly) -> Option<SeriesCheck> {
    if lhs == rhs {
        return None;
    }
    let k = (0..).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap();
    Some(SeriesCheck {
        name: name.to_string(),
        passed: false,
        detail: Some(format!(
            "{label} at x^{k}: left {}, right {}",
            lhs.coeff(k),
            rhs.coeff(k)
        )),
    })
}

fn passed(name: &str) -> SeriesCheck {
    SeriesCheck {
        name: name.to_string(),
        passed: true,
        detail: None,
    }
}

pub const G0_EQUATION: &str = "G0 = t(1-t+xt)G0^2 + 1";
pub const GJ_PRODUCT: &str = "Gj = t^j (1-t+xt)^j G0";
pub const G_RECURRENCE: &str = "g(n,j) = g(n-1,j-1) + (x-1) g(n-2,j-1)";
pub const G0_RECURRENCE: &str = "g(n,0) first-return recurrence";
pub const P_EQUATION: &str = "P (1 - y z^2 N(x,y z^2) - y z C(y)) = C(y)";

/// The polynomial data behind the series identities. Fields are public so a
/// caller can perturb them and watch the named check fail.
#[derive(Debug, Clone)]
pub struct SeriesData {
    pub order: u32,
    /// `g[n][j] = g_{n,j}(x)` for `0 <= j <= n + 1 <= order + 1`.
    pub g: Vec<Vec<IntPoly>>,
    /// `p[n][m] = p_{n,m}(x)` for `n <= order`, `m <= 2n`.
    pub p: Vec<Vec<IntPoly>>,
}

impl SeriesData {
    pub fn build(order: u32) -> Self {
        let n_max = order as usize;
        let g = (0..=n_max)
            .map(|n| (0..=n + 1).map(|j| g_contrib(n, j)).collect())
            .collect();
        let p = PeakTable::new(n_max).rows().to_vec();
        SeriesData { order, g, p }
    }

    fn g_at(&self, n: i64, j: usize) -> IntPoly {
        if n < 0 {
            return IntPoly::zero();
        }
        self.g[n as usize].get(j).cloned().unwrap_or_default()
    }

    fn g_series(&self, j: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(&["x", "t"], &[0, 1], self.order);
        for (n, row) in self.g.iter().enumerate() {
            if let Some(p) = row.get(j) {
                s.add_poly(0, p, &[0, n as u32]);
            }
        }
        s
    }

    /// `1 - t + x t`.
    fn step(&self) -> TruncSeries {
        let mut s = TruncSeries::zero(&["x", "t"], &[0, 1], self.order);
        s.add_term(vec![0, 0], BigInt::one());
        s.add_term(vec![0, 1], -BigInt::one());
        s.add_term(vec![1, 1], BigInt::one());
        s
    }

    fn t_power(&self, e: u32) -> TruncSeries {
        let mut s = TruncSeries::zero(&["x", "t"], &[0, 1], self.order);
        s.add_term(vec![0, e], BigInt::one());
        s
    }

    pub fn check_g0_equation(&self) -> SeriesCheck {
        let g0 = self.g_series(0);
        let rhs = &(&(&self.t_power(1) * &self.step()) * &(&g0 * &g0)) + &g0.one_like();
        compare_series(G0_EQUATION, &g0, &rhs)
    }

    pub fn check_gj_products(&self) -> SeriesCheck {
        let g0 = self.g_series(0);
        for j in 1..=self.order {
            let lhs = self.g_series(j as usize);
            let rhs = &(&self.t_power(j) * &self.step().pow(j)) * &g0;
            let mut c = compare_series(GJ_PRODUCT, &lhs, &rhs);
            if !c.passed {
                c.detail = c.detail.map(|d| format!("j = {j}: {d}"));
                return c;
            }
        }
        passed(GJ_PRODUCT)
    }

    pub fn check_g_recurrence(&self) -> SeriesCheck {
        let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
        for n in 2..=self.order as i64 {
            for j in 1..=n as usize + 1 {
                let lhs = self.g_at(n, j);
                let rhs = &self.g_at(n - 1, j - 1) + &(&x_minus_1 * &self.g_at(n - 2, j - 1));
                if let Some(c) = compare_polys(G_RECURRENCE, &format!("g({n},{j})"), &lhs, &rhs) {
                    return c;
                }
            }
        }
        passed(G_RECURRENCE)
    }

    pub fn check_g0_recurrence(&self) -> SeriesCheck {
        let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
        for n in 1..=self.order as i64 {
            let mut rhs = IntPoly::zero();
            for m in 2..=n {
                rhs = &rhs + &(&x_minus_1 * &(&self.g_at(m - 2, 0) * &self.g_at(n - m, 0)));
            }
            for m in 1..=n {
                rhs = &rhs + &(&self.g_at(m - 1, 0) * &self.g_at(n - m, 0));
            }
            if let Some(c) =
                compare_polys(G0_RECURRENCE, &format!("g({n},0)"), &self.g_at(n, 0), &rhs)
            {
                return c;
            }
        }
        passed(G0_RECURRENCE)
    }

    pub fn check_p_equation(&self) -> SeriesCheck {
        let vars = ["x", "y", "z"];
        let weights = [0, 1, 1];
        let order = self.order;
        let mut p = TruncSeries::zero(&vars, &weights, order);
        for (n, row) in self.p.iter().enumerate() {
            for (m, poly) in row.iter().enumerate() {
                p.add_poly(0, poly, &[0, n as u32, m as u32]);
            }
        }
        let mut c = TruncSeries::zero(&vars, &weights, order);
        let mut n_part = TruncSeries::zero(&vars, &weights, order);
        let mut c_part = TruncSeries::zero(&vars, &weights, order);
        for k in 0..=order {
            let ck = catalan(k);
            c.add_term(vec![0, k, 0], ck.clone());
            // y z^2 N(x, y z^2) and y z C(y)
            n_part.add_poly(0, &narayana(k as usize), &[0, k + 1, 2 * k + 2]);
            c_part.add_term(vec![0, k + 1, 1], ck);
        }
        let factor = &(&p.one_like() - &n_part) - &c_part;
        compare_series(P_EQUATION, &(&p * &factor), &c)
    }

    pub fn checks(&self) -> Vec<SeriesCheck> {
        vec![
            self.check_g0_equation(),
            self.check_gj_products(),
            self.check_g_recurrence(),
            self.check_g0_recurrence(),
            self.check_p_equation(),
        ]
    }
}

/// Builds the truncated series to `order` and checks all five identity families.
pub fn verify_series(order: u32) -> SeriesReport {
    SeriesReport {
        order,
        checks: SeriesData::build(order).checks(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_arithmetic() {
        let mut s = TruncSeries::zero(&["x", "t"], &[0, 1], 3);
        s.add_term(vec![0, 0], BigInt::one());
        s.add_term(vec![0, 1], BigInt::one());
        // (1 + t)^5 truncated at t^3
        let p = s.pow(5);
        assert_eq!(p.coefficient(&[0, 3]), BigInt::from(10));
        assert_eq!(p.coefficient(&[0, 4]), BigInt::zero());
        assert_eq!(p.terms().count(), 4);
        let mut x = s.like();
        x.add_term(vec![7, 0], BigInt::one());
        assert_eq!(x.coefficient(&[7, 0]), BigInt::one());
        assert_eq!(s.monomial_name(&[2, 1]), "x^2 t");
        assert_eq!((&s - &s).terms().count(), 0);
    }

    #[test]
    fn identities_hold() {
        for order in 1..=10 {
            let report = verify_series(order);
            assert_eq!(report.checks.len(), 5);
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn perturbation_is_caught_and_named() {
        let mut data = SeriesData::build(6);
        data.g[4][0] = &data.g[4][0] + &IntPoly::monomial(1, 2);
        let g0 = data.check_g0_equation();
        assert!(!g0.passed);
        assert_eq!(g0.name, G0_EQUATION);
        assert_eq!(
            g0.detail.as_deref(),
            Some("coefficient of x^2 t^4: left 3, right 2")
        );
        assert!(!data.check_g0_recurrence().passed);
        assert!(!data.check_gj_products().passed);
        assert!(!data.check_g_recurrence().passed);

        let mut data = SeriesData::build(6);
        data.p[2][3] = &data.p[2][3] + &IntPoly::one();
        let p = data.check_p_equation();
        assert!(!p.passed);
        assert_eq!(p.name, P_EQUATION);
        assert_eq!(
            p.detail.as_deref(),
            Some("coefficient of y^2 z^3: left 1, right 0")
        );
    }
}
