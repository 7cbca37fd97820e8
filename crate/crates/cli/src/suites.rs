//! Exhaustive verification suites. Each check is a plain function of its bound
//! so callers can run it at any size; [`run_suite`] bundles them by topic.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use toricg::compat::{
    compatible_words, compress, count_compatible, dyck_to_nc, expand, nc_to_dyck, WordKind,
};
use toricg::nestohedra::{
    b_permutations, gamma_chordal, h_chordal, named_family, toric_g_chordal, toric_g_direct,
    NamedFamily,
};
use toricg::parking::{
    all_functions, bfs_tree, dfs_tree, enumerate_123_avoiding_functions, fn_ascents,
    fn_is_123_avoiding, for_each_parking_tree, garsia_haiman, garsia_haiman_inverse,
    FiniteFunction, GhPair, ParkingTree,
};
use toricg::perms::{
    all_permutations, enumerate_123_avoiding, enumerate_increasing_012, krattenthaler,
    krattenthaler_inverse, FsTree, PlaneTree,
};
use toricg::polyvec::{
    g_contrib, gamma_family, h_family, h_to_gamma, is_palindromic, kruskal_katona_ok,
    sturm_real_rooted, toric_g_family, toric_g_from_gamma, toric_g_hetyei, verify_series, Family,
    IntPoly, PeakTable,
};
use toricg::words::{
    binomial, catalan, dyck_to_lukasiewicz, dyck_to_motzkin, enumerate_words, lukasiewicz_to_dyck,
    motzkin_to_dyck, sparse_subsets, SparseSet, Word, WordClass,
};
use toricg::Limits;

use crate::{CliError, CliResult, SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of objects or identities examined.
    pub cases: u64,
    pub detail: Option<String>,
    /// Per-polynomial outcomes of the informational probes.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outcomes: Vec<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub subject: String,
    pub coefficients: Vec<String>,
    pub holds: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAILED" };
        write!(f, "{}: {status} ({} cases)", self.name, self.cases)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

/// Counts cases and remembers the first failure.
struct Tally {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure,
            outcomes: Vec::new(),
        }
    }
}

fn hist_poly(hist: &[u64]) -> IntPoly {
    IntPoly::new(hist.iter().map(|&c| BigInt::from(c)).collect())
}

fn word(s: &str) -> Word {
    s.parse().expect("valid literal word")
}

fn sparse_pairs(n: usize) -> Vec<(SparseSet, SparseSet)> {
    let sparse = sparse_subsets(1, (n as u32).saturating_sub(1));
    let mut out = Vec::new();
    for a in &sparse {
        for b in &sparse {
            if a.len() + b.len() <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Bijections
// ---------------------------------------------------------------------------

pub fn krattenthaler_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("krattenthaler_round_trip");
    for n in 0..=n_max {
        let mut images = BTreeSet::new();
        for p in enumerate_123_avoiding(n) {
            let back = krattenthaler(&p).and_then(|w| {
                images.insert(w);
                krattenthaler_inverse(&w).map(|q| (w, q))
            });
            t.case(
                matches!(&back, Ok((w, q)) if w.is_dyck() && *q == p),
                || format!("{p}: {back:?}"),
            );
        }
        t.case(BigInt::from(images.len()) == catalan(n as u32), || {
            format!("n = {n}: {} distinct images", images.len())
        });
    }
    t.finish()
}

pub fn garsia_haiman_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("garsia_haiman_round_trip");
    for n in 0..=n_max {
        for f in all_functions(n) {
            let gh = garsia_haiman(&f);
            let ok = gh.word.is_balanced()
                && f.is_parking() == gh.word.is_dyck()
                && GhPair::new(gh.perm.clone(), gh.word).as_ref() == Ok(&gh)
                && garsia_haiman_inverse(&gh) == f;
            t.case(ok, || format!("{f} -> ({}, {})", gh.perm, gh.word));
        }
    }
    t.finish()
}

pub fn lukasiewicz_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("lukasiewicz_round_trip");
    for n in 0..=n_max {
        for w in enumerate_words(WordClass::Dyck(n)) {
            let back = dyck_to_lukasiewicz(&w).and_then(|l| lukasiewicz_to_dyck(&l));
            t.case(back.as_ref() == Ok(&w), || format!("{w}: {back:?}"));
        }
    }
    t.finish()
}

pub fn motzkin_round_trip(n_max: usize) -> Check {
    let uuu = word("UUU");
    let mut t = Tally::new("motzkin_round_trip");
    for n in 0..=n_max {
        for w in enumerate_words(WordClass::Dyck(n)).filter(|w| w.factor_count(&uuu) == 0) {
            let back = dyck_to_motzkin(&w).and_then(|m| motzkin_to_dyck(&m));
            t.case(back.as_ref() == Ok(&w), || format!("{w}: {back:?}"));
        }
    }
    t.finish()
}

pub fn dyck_nc_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("dyck_nc_round_trip");
    for n in 0..=n_max {
        let mut seen = HashSet::new();
        for w in enumerate_words(WordClass::Dyck(n)) {
            match dyck_to_nc(&w) {
                Ok(p) => t.case(nc_to_dyck(&p) == w && seen.insert(p.clone()), || {
                    format!("{w} -> {p} -> {}", nc_to_dyck(&p))
                }),
                Err(e) => t.case(false, || format!("{w}: {e}")),
            }
        }
    }
    t.finish()
}

pub fn parking_tree_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("dfs_bfs_tree_round_trip");
    for n in 1..=n_max {
        let mut dfs_seen = HashSet::new();
        let mut bfs_seen = HashSet::new();
        for f in all_functions(n).filter(FiniteFunction::is_parking) {
            for (kind, tree, seen) in [
                ("dfs", dfs_tree(&f), &mut dfs_seen),
                ("bfs", bfs_tree(&f), &mut bfs_seen),
            ] {
                match tree {
                    Ok(tree) => {
                        let reparsed = tree.to_string().parse::<ParkingTree>();
                        let ok = tree.to_function() == f
                            && reparsed.as_ref() == Ok(&tree)
                            && seen.insert(tree.clone());
                        t.case(ok, || format!("{kind} tree of {f}: {tree}"));
                    }
                    Err(e) => t.case(false, || format!("{kind} tree of {f}: {e}")),
                }
            }
        }
    }
    t.finish()
}

pub fn fs_tree_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("fs_tree_round_trip");
    for n in 0..=n_max {
        for p in all_permutations(n) {
            let tree = FsTree::of(&p);
            let ok = tree.inorder() == p
                && tree.right_adjusted().is_right_adjusted()
                && (1..=n as u32).all(|x| {
                    tree.phi(x).and_then(|s| s.phi(x)).as_ref() == Ok(&tree)
                        && tree.psi(x).and_then(|s| s.psi(x)).as_ref() == Ok(&tree)
                });
            t.case(ok, || format!("{p}"));
        }
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Compatibility
// ---------------------------------------------------------------------------

pub fn compress_expand_round_trip(n_max: usize) -> Check {
    let mut t = Tally::new("compress_expand_round_trip");
    for n in 0..=n_max {
        for (a, b) in sparse_pairs(n) {
            let m = n - a.len() - b.len();
            let words = match compatible_words(n, &a, &b, WordKind::Dyck) {
                Ok(w) => w,
                Err(e) => {
                    t.case(false, || format!("n = {n}, A = {a}, B = {b}: {e}"));
                    continue;
                }
            };
            let mut images = HashSet::new();
            for w in &words {
                let back = compress(w, &a, &b).and_then(|c| {
                    images.insert(c);
                    expand(&c, n, &a, &b).map(|e| (c, e))
                });
                let ok =
                    matches!(&back, Ok((c, e)) if c.is_dyck() && c.semilength() == m && e == w);
                t.case(ok, || {
                    format!("n = {n}, A = {a}, B = {b}, w = {w}: {back:?}")
                });
            }
            t.case(images.len() == words.len(), || {
                format!("n = {n}, A = {a}, B = {b}: compress is not injective")
            });
        }
    }
    t.finish()
}

fn count_check(name: &'static str, n_max: usize, kind: WordKind) -> Check {
    let mut t = Tally::new(name);
    for n in 0..=n_max {
        for (a, b) in sparse_pairs(n) {
            let m = (n - a.len() - b.len()) as i64;
            let expected = match kind {
                WordKind::Dyck => catalan(m as u32),
                WordKind::Balanced => binomial(2 * m, m),
            };
            let got = count_compatible(n, &a, &b, kind);
            t.case(
                got.as_ref().is_ok_and(|&c| BigInt::from(c) == expected),
                || format!("n = {n}, A = {a}, B = {b}: counted {got:?}, expected {expected}"),
            );
        }
    }
    t.finish()
}

pub fn count_compatible_dyck(n_max: usize) -> Check {
    count_check("count_compatible_dyck", n_max, WordKind::Dyck)
}

pub fn count_compatible_balanced(n_max: usize) -> Check {
    count_check("count_compatible_balanced", n_max, WordKind::Balanced)
}

/// Ascents of 123-avoiding permutations, their inverses and 123-avoiding
/// parking functions, and the block statistics of noncrossing partitions,
/// against `UUD` and `UDD` factor counts.
pub fn statistic_transfers(n_max: usize) -> Check {
    let (uud, udd) = (word("UUD"), word("UDD"));
    let mut t = Tally::new("statistic_transfers");
    for n in 0..=n_max {
        for p in enumerate_123_avoiding(n) {
            match krattenthaler(&p) {
                Ok(w) => t.case(
                    p.inverse().ascents().len() == w.factor_count(&uud)
                        && p.ascents().len() == w.factor_count(&udd),
                    || format!("permutation {p} -> {w}"),
                ),
                Err(e) => t.case(false, || format!("permutation {p}: {e}")),
            }
        }
        for w in enumerate_words(WordClass::Dyck(n)) {
            match dyck_to_nc(&w) {
                Ok(p) => t.case(
                    p.nonsingleton_blocks().len() == w.factor_count(&uud)
                        && p.fillers().len() == w.factor_count(&udd),
                    || format!("{w} -> partition {p}"),
                ),
                Err(e) => t.case(false, || format!("{w}: {e}")),
            }
        }
        let functions = enumerate_123_avoiding_functions(n, true, &Limits::unbounded())
            .expect("unbounded limits");
        for f in functions {
            let gh = garsia_haiman(&f);
            match krattenthaler(&gh.perm) {
                Ok(w) => t.case(f.ascents() == w.factor_count(&uud), || {
                    format!("parking function {f} -> {w}")
                }),
                Err(e) => t.case(false, || format!("parking function {f}: {e}")),
            }
        }
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Series and peaks
// ---------------------------------------------------------------------------

pub fn series_identities(order: usize) -> Vec<Check> {
    verify_series(order as u32)
        .checks
        .into_iter()
        .map(|c| Check {
            name: format!("series: {}", c.name),
            passed: c.passed,
            cases: 1,
            detail: c.detail,
            outcomes: Vec::new(),
        })
        .collect()
}

/// Peaks `U D` whose `D` is among the first `within` letters.
fn peaks(w: &Word, within: usize) -> usize {
    (1..w.len().min(within))
        .filter(|&i| !w.is_down(i - 1) && w.is_down(i))
        .count()
}

pub fn peak_recurrence(n_max: usize) -> Check {
    let mut t = Tally::new("peak_recurrence");
    let table = PeakTable::new(n_max);
    for n in 0..=n_max {
        let words: Vec<Word> = enumerate_words(WordClass::Dyck(n)).collect();
        for m in 0..=2 * n {
            let mut hist = vec![0u64; n + 1];
            for w in &words {
                hist[peaks(w, m)] += 1;
            }
            let expected = hist_poly(&hist);
            let got = table.get(n, m);
            t.case(got == Ok(&expected), || {
                format!("p({n},{m}): recurrence {got:?}, enumeration {expected}")
            });
        }
    }
    t.finish()
}

pub fn g_is_peak_polynomial(n_max: usize) -> Check {
    let mut t = Tally::new("g_equals_peak_polynomial");
    let table = PeakTable::new(n_max);
    for n in 0..=n_max {
        for j in 0..=n / 2 {
            let g = g_contrib(n, j);
            let p = table.get(n - j, n);
            t.case(p == Ok(&g), || {
                format!("g({n},{j}) = {g}, p({},{n}) = {p:?}", n - j)
            });
        }
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Gamma vectors and toric g routes
// ---------------------------------------------------------------------------

pub fn family_routes_agree(n_max: usize) -> Check {
    let mut t = Tally::new("family_routes_agree");
    for family in Family::ALL {
        for n in 1..=n_max {
            let gamma = gamma_family(family, n);
            let h = h_family(family, n);
            let by_gamma = toric_g_from_gamma(n, &gamma);
            let by_h = toric_g_hetyei(&h);
            let ok = h_to_gamma(&h).as_ref() == Ok(&gamma)
                && by_h.as_ref() == Ok(&by_gamma)
                && toric_g_family(family, n) == by_gamma;
            t.case(ok, || {
                format!("{family} n = {n}: gamma route {by_gamma}, h route {by_h:?}")
            });
        }
    }
    t.finish()
}

fn ascent_poly(n: usize, keep: impl Fn(&FiniteFunction) -> bool) -> IntPoly {
    let mut hist = vec![0u64; n + 1];
    for f in all_functions(n).filter(|f| fn_is_123_avoiding(f.values()) && keep(f)) {
        hist[fn_ascents(f.values())] += 1;
    }
    hist_poly(&hist)
}

/// Brute force over all functions `[n] -> [n]`, keeping 123-avoiding parking functions.
pub fn associahedron_parking_functions(n_max: usize) -> Check {
    let mut t = Tally::new("associahedron_parking_functions");
    for n in 1..=n_max {
        let got = ascent_poly(n, FiniteFunction::is_parking);
        let expected = toric_g_family(Family::Associahedron, n);
        t.case(got == expected, || {
            format!("n = {n}: enumeration {got}, table {expected}")
        });
    }
    t.finish()
}

/// Brute force over all functions `[n] -> [n]`, keeping the 123-avoiding ones.
pub fn cyclohedron_functions(n_max: usize) -> Check {
    let mut t = Tally::new("cyclohedron_functions");
    for n in 1..=n_max {
        let got = ascent_poly(n, |_| true);
        let expected = toric_g_family(Family::Cyclohedron, n);
        t.case(got == expected, || {
            format!("n = {n}: enumeration {got}, table {expected}")
        });
    }
    t.finish()
}

pub fn permutahedron_parking_trees(n_max: usize) -> Check {
    let mut t = Tally::new("permutahedron_parking_trees");
    let limits = Limits::unbounded();
    for n in 1..=n_max {
        let got = named_family(NamedFamily::Permutahedron, n as u32)
            .and_then(|bs| toric_g_direct(&bs, &limits));
        let expected = toric_g_family(Family::Permutahedron, n);
        t.case(got.as_ref() == Ok(&expected), || {
            format!("n = {n}: direct route {got:?}, table {expected}")
        });
    }
    t.finish()
}

pub fn parking_tree_counts(n_max: usize) -> Check {
    let mut t = Tally::new("parking_tree_counts");
    let mut factorial = BigInt::from(1);
    for n in 0..=n_max {
        if n > 0 {
            factorial *= n;
        }
        let mut count = 0u64;
        let run = for_each_parking_tree(n, &Limits::unbounded(), |_, _| count += 1);
        let expected = &factorial * &factorial;
        t.case(run.is_ok() && BigInt::from(count) == expected, || {
            format!("n = {n}: {count} trees, expected {expected}")
        });
    }
    t.finish()
}

pub fn permutahedron_gamma_forks(n_max: usize) -> Check {
    let mut t = Tally::new("permutahedron_gamma_forks");
    for n in 0..=n_max {
        let mut forks = vec![BigInt::from(0); n / 2 + 1];
        for tree in enumerate_increasing_012(n + 1) {
            forks[tree.forks()] += 1;
        }
        let expected = gamma_family(Family::Permutahedron, n);
        t.case(forks == expected, || {
            format!("n = {n}: forks {forks:?}, gamma {expected:?}")
        });
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Nestohedra
// ---------------------------------------------------------------------------

fn named_kinds(n: u32) -> Vec<NamedFamily> {
    let mut kinds = vec![
        NamedFamily::Permutahedron,
        NamedFamily::StanleyPitman,
        NamedFamily::AssociahedronIntervals,
    ];
    kinds.extend((1..=n).map(NamedFamily::Interpolation));
    kinds
}

/// h palindromic, `h_to_gamma(h) = gamma`, gamma again from forks of the
/// right-adjusted B-permutation trees, and both toric g routes agree.
pub fn nestohedra_pipeline(n_max: usize) -> Check {
    let mut t = Tally::new("nestohedra_pipeline");
    let limits = Limits::unbounded();
    for n in 1..=n_max as u32 {
        for kind in named_kinds(n) {
            let run = || -> toricg::Result<Option<String>> {
                let bs = named_family(kind, n)?;
                let h = h_chordal(&bs, &limits)?;
                let gamma = gamma_chordal(&bs, &limits)?;
                if !is_palindromic(&h) {
                    return Ok(Some(format!("h = {h:?} is not palindromic")));
                }
                if h_to_gamma(&h)? != gamma {
                    return Ok(Some(format!(
                        "h_to_gamma(h) differs from gamma = {gamma:?}"
                    )));
                }
                let mut forks = vec![BigInt::from(0); n as usize / 2 + 1];
                for p in b_permutations(&bs, &limits)? {
                    let tree = FsTree::of(&p);
                    if tree.is_right_adjusted() {
                        forks[PlaneTree::from_fs_tree(&tree).forks()] += 1;
                    }
                }
                if forks != gamma {
                    return Ok(Some(format!("forks {forks:?}, gamma {gamma:?}")));
                }
                let g = toric_g_chordal(&bs, &limits)?;
                let by_h = toric_g_hetyei(&h)?;
                if g != by_h {
                    return Ok(Some(format!("gamma route {g}, h route {by_h}")));
                }
                Ok(None)
            };
            let outcome = run();
            t.case(matches!(outcome, Ok(None)), || match outcome {
                Ok(Some(d)) => format!("{kind} n = {n}: {d}"),
                Err(e) => format!("{kind} n = {n}: {e}"),
                Ok(None) => unreachable!(),
            });
        }
    }
    t.finish()
}

pub fn stanley_pitman_is_g_n0(n_max: usize) -> Check {
    let mut t = Tally::new("stanley_pitman_is_g_n0");
    for n in 1..=n_max {
        let got = named_family(NamedFamily::StanleyPitman, n as u32)
            .and_then(|bs| toric_g_chordal(&bs, &Limits::unbounded()));
        let expected = g_contrib(n, 0);
        t.case(got.as_ref() == Ok(&expected), || {
            format!("n = {n}: {got:?}, g(n,0) = {expected}")
        });
    }
    t.finish()
}

pub fn intervals_are_associahedra(n_max: usize) -> Check {
    let mut t = Tally::new("intervals_are_associahedra");
    let limits = Limits::unbounded();
    for n in 1..=n_max {
        let bs = named_family(NamedFamily::AssociahedronIntervals, n as u32);
        let gamma = bs
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|bs| gamma_chordal(bs, &limits));
        let g = bs.and_then(|bs| toric_g_chordal(&bs, &limits));
        let ok = gamma.as_ref() == Ok(&gamma_family(Family::Associahedron, n))
            && g.as_ref() == Ok(&toric_g_family(Family::Associahedron, n));
        t.case(ok, || format!("n = {n}: gamma {gamma:?}, toric g {g:?}"));
    }
    t.finish()
}

// ---------------------------------------------------------------------------
// Conjecture probes
// ---------------------------------------------------------------------------

fn coefficients(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn informational(name: &'static str, outcomes: Vec<Outcome>) -> Check {
    let holds = outcomes.iter().filter(|o| o.holds).count();
    let failing: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.holds)
        .map(|o| o.subject.as_str())
        .collect();
    let mut detail = format!("holds for {holds} of {}", outcomes.len());
    if !failing.is_empty() {
        detail.push_str(&format!("; fails for {}", failing.join(", ")));
    }
    Check {
        name: name.to_string(),
        passed: true,
        cases: outcomes.len() as u64,
        detail: Some(detail),
        outcomes,
    }
}

/// Sturm-sequence real-rootedness of every `g_{n,j}`, `j <= n/2`. Informational.
pub fn real_rootedness(n_max: usize) -> Check {
    let mut outcomes = Vec::new();
    for n in 0..=n_max {
        for j in 0..=n / 2 {
            let g = g_contrib(n, j);
            outcomes.push(Outcome {
                subject: format!("g({n},{j})"),
                holds: sturm_real_rooted(&g).expect("g(n,j) is nonzero for j <= n/2"),
                coefficients: coefficients(&g),
            });
        }
    }
    informational("real_rootedness", outcomes)
}

/// Kruskal–Katona on the toric g-vectors of the tabulated families. Informational.
pub fn kruskal_katona(n_max: usize) -> Check {
    let mut outcomes = Vec::new();
    for family in [
        Family::Associahedron,
        Family::Cyclohedron,
        Family::Permutahedron,
    ] {
        for n in 1..=n_max {
            let g = toric_g_family(family, n);
            outcomes.push(Outcome {
                subject: format!("{family} n = {n}"),
                holds: kruskal_katona_ok(g.coeffs()),
                coefficients: coefficients(&g),
            });
        }
    }
    informational("kruskal_katona", outcomes)
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijections,
    Compat,
    Series,
    Gamma,
    Nestohedra,
    Conjectures,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bijections,
        Suite::Compat,
        Suite::Series,
        Suite::Gamma,
        Suite::Nestohedra,
        Suite::Conjectures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Compat => "compat",
            Suite::Series => "series",
            Suite::Gamma => "gamma",
            Suite::Nestohedra => "nestohedra",
            Suite::Conjectures => "conjectures",
        }
    }

    /// Checks the requested bound against the relevant capacity limits.
    fn check_capacity(self, n: usize, lim: &Limits) -> toricg::Result<()> {
        match self {
            Suite::Bijections => {
                Limits::check("bijection suite", n, lim.verify_suites)?;
                Limits::check("bijection suite (all functions)", n, lim.all_functions)
            }
            Suite::Compat => Limits::check("compatibility suite", n, lim.verify_suites),
            Suite::Series => Limits::check("series suite", n, lim.formula_routes),
            Suite::Gamma => {
                Limits::check("gamma suite", n, lim.direct_route)?;
                Limits::check("gamma suite (parking trees)", n, lim.parking_trees)?;
                Limits::check("gamma suite (all functions)", n, lim.all_functions)
            }
            Suite::Nestohedra => Limits::check("nestohedra suite", n, lim.b_permutations),
            Suite::Conjectures => Limits::check("conjecture probes", n, lim.formula_routes),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                CliError::Usage(format!("unknown suite {s:?} ({})", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub n_max: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

type Job = fn(usize) -> Check;

fn jobs(suite: Suite) -> Vec<Job> {
    match suite {
        Suite::Bijections => vec![
            krattenthaler_round_trip,
            garsia_haiman_round_trip,
            lukasiewicz_round_trip,
            motzkin_round_trip,
            dyck_nc_round_trip,
            parking_tree_round_trip,
            fs_tree_round_trip,
        ],
        Suite::Compat => vec![
            compress_expand_round_trip,
            count_compatible_dyck,
            count_compatible_balanced,
            statistic_transfers,
        ],
        Suite::Series => vec![peak_recurrence, g_is_peak_polynomial],
        Suite::Gamma => vec![
            family_routes_agree,
            associahedron_parking_functions,
            cyclohedron_functions,
            permutahedron_parking_trees,
            parking_tree_counts,
            permutahedron_gamma_forks,
        ],
        Suite::Nestohedra => vec![
            nestohedra_pipeline,
            stanley_pitman_is_g_n0,
            intervals_are_associahedra,
        ],
        Suite::Conjectures => vec![real_rootedness, kruskal_katona],
    }
}

/// Runs every check of `suite` up to `n_max` in parallel, reporting in a fixed order.
pub fn run_suite(suite: Suite, n_max: usize, limits: &Limits) -> CliResult<SuiteReport> {
    suite.check_capacity(n_max, limits)?;
    let mut checks = if suite == Suite::Series {
        series_identities(n_max)
    } else {
        Vec::new()
    };
    checks.extend(
        jobs(suite)
            .par_iter()
            .map(|job| job(n_max))
            .collect::<Vec<_>>(),
    );
    Ok(SuiteReport {
        schema: SCHEMA,
        suite: suite.name().to_string(),
        n_max,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

pub fn cmd_verify(
    suite: Suite,
    n_max: usize,
    limits: &Limits,
    out: &mut dyn std::io::Write,
) -> CliResult<()> {
    let report = run_suite(suite, n_max, limits)?;
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    writeln!(out, "{text}")?;
    if report.passed {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}
