//! Library side of the `toricg` command: table generation, verification suites
//! and enumeration dumps. Every command writes to a caller-supplied writer so
//! output can be captured in tests.

use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use toricg::nestohedra::{
    b_permutations, h_chordal, named_family, toric_g_chordal, toric_g_direct, BuildingSet,
    NamedFamily,
};
use toricg::parking::{enumerate_123_avoiding_functions, for_each_parking_tree, ParkingTree};
use toricg::polyvec::{
    gamma_family, h_family, toric_g_from_gamma, toric_g_hetyei, Family, IntPoly,
};
use toricg::words::{enumerate_words, Word, WordClass};
use toricg::Limits;

pub mod suites;

pub const SCHEMA: &str = "toricg/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] toricg::Error),

    #[error("{0}")]
    Disagreement(String),

    #[error("verification failed")]
    VerifyFailed,

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 for failed checks, 2 for usage and parse errors, 3 for capacity errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) | CliError::VerifyFailed => 1,
            CliError::Core(toricg::Error::Capacity { .. }) => 3,
            CliError::Usage(_) | CliError::Core(_) | CliError::Read { .. } | CliError::Io(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Capacity bounds for every command, or no bounds at all with `--unsafe-max`.
pub fn limits(unsafe_max: bool) -> Limits {
    if unsafe_max {
        Limits::unbounded()
    } else {
        Limits::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Gamma,
    Hetyei,
    Direct,
    All,
}

impl FromStr for Route {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "gamma" => Ok(Route::Gamma),
            "hetyei" => Ok(Route::Hetyei),
            "direct" => Ok(Route::Direct),
            "all" => Ok(Route::All),
            _ => Err(CliError::Usage(format!(
                "unknown route {s:?} (gamma, hetyei, direct, all)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (csv, json)"))),
        }
    }
}

/// What a table is computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Polytope(Family),
    Named(NamedFamily),
    BuildingSet(BuildingSet),
}

impl Source {
    /// A polytope family name or a named building-set family.
    pub fn parse_family(s: &str) -> CliResult<Source> {
        if let Ok(f) = s.parse::<Family>() {
            return Ok(Source::Polytope(f));
        }
        s.parse::<NamedFamily>().map(Source::Named).map_err(|_| {
            CliError::Usage(format!(
                "unknown family {s:?}; expected cube, associahedron, cyclohedron, permutahedron, \
                 stanley_pitman, associahedron_intervals or interpolation:<r>"
            ))
        })
    }

    pub fn load_building_set(path: &std::path::Path) -> CliResult<Source> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let bs = BuildingSet::from_json(&text)?;
        bs.validate()?;
        Ok(Source::BuildingSet(bs))
    }

    fn label(&self) -> String {
        match self {
            Source::Polytope(f) => f.to_string(),
            Source::Named(k) => k.to_string(),
            Source::BuildingSet(bs) => format!("building set {bs}"),
        }
    }

    fn building_set(&self, n: usize) -> CliResult<BuildingSet> {
        match self {
            Source::Polytope(Family::Cube) => {
                Ok(named_family(NamedFamily::StanleyPitman, n as u32)?)
            }
            Source::Polytope(Family::Associahedron) => {
                Ok(named_family(NamedFamily::AssociahedronIntervals, n as u32)?)
            }
            Source::Polytope(Family::Permutahedron) => {
                Ok(named_family(NamedFamily::Permutahedron, n as u32)?)
            }
            Source::Polytope(Family::Cyclohedron) => Err(CliError::Usage(
                "the cyclohedron is not a chordal nestohedron".into(),
            )),
            Source::Named(kind) => Ok(named_family(*kind, n as u32)?),
            Source::BuildingSet(bs) => Ok(bs.clone()),
        }
    }
}

pub struct TableRequest {
    pub source: Source,
    /// Rows `1..=max` (`r..=max` for `interpolation:r`); ignored for a
    /// building set, whose dimension is fixed.
    pub max: Option<usize>,
    pub route: Route,
    pub format: Format,
    pub limits: Limits,
}

fn single_route(source: &Source, n: usize, route: Route, limits: &Limits) -> CliResult<IntPoly> {
    match route {
        Route::Direct => Limits::check("direct toric g route", n, limits.direct_route)?,
        _ => Limits::check("formula toric g routes", n, limits.formula_routes)?,
    }
    match (source, route) {
        (Source::Polytope(f), Route::Gamma) => Ok(toric_g_from_gamma(n, &gamma_family(*f, n))),
        (Source::Polytope(f), Route::Hetyei) => Ok(toric_g_hetyei(&h_family(*f, n))?),
        (Source::Polytope(Family::Cyclohedron), Route::Direct) => {
            let mut hist = vec![BigInt::from(0); n + 1];
            for f in enumerate_123_avoiding_functions(n, false, limits)? {
                hist[f.ascents()] += 1;
            }
            Ok(IntPoly::new(hist))
        }
        (_, Route::Gamma) => Ok(toric_g_chordal(&source.building_set(n)?, limits)?),
        (_, Route::Hetyei) => Ok(toric_g_hetyei(&h_chordal(
            &source.building_set(n)?,
            limits,
        )?)?),
        (_, Route::Direct) => Ok(toric_g_direct(&source.building_set(n)?, limits)?),
        (_, Route::All) => unreachable!("expanded by the caller"),
    }
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Gamma => "gamma",
        Route::Hetyei => "hetyei",
        Route::Direct => "direct",
        Route::All => "all",
    }
}

/// The toric g-polynomial of dimension `n` by `route`; `All` computes every
/// route and fails on the first disagreement.
pub fn toric_g_row(source: &Source, n: usize, route: Route, limits: &Limits) -> CliResult<IntPoly> {
    if route != Route::All {
        return single_route(source, n, route, limits);
    }
    let reference = single_route(source, n, Route::Gamma, limits)?;
    for other in [Route::Hetyei, Route::Direct] {
        let g = single_route(source, n, other, limits)?;
        if g != reference {
            return Err(CliError::Disagreement(format!(
                "{}: n = {n}: gamma route gives {reference}, {} route gives {g}",
                source.label(),
                route_name(other)
            )));
        }
    }
    Ok(reference)
}

/// A JSON number when the coefficient fits in 64 bits, else a decimal string.
fn json_coeff(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn cmd_table(req: &TableRequest, out: &mut dyn Write) -> CliResult<()> {
    let dims: Vec<usize> = match (&req.source, req.max) {
        (Source::BuildingSet(bs), _) => vec![bs.ground_size() as usize - 1],
        (Source::Named(NamedFamily::Interpolation(r)), Some(max))
            if *r >= 1 && max >= *r as usize =>
        {
            (*r as usize..=max).collect()
        }
        (Source::Named(NamedFamily::Interpolation(r)), Some(_)) => {
            return Err(CliError::Usage(format!(
                "interpolation:{r} needs 1 <= r <= --max"
            )))
        }
        (_, Some(max)) if max >= 1 => (1..=max).collect(),
        (_, Some(_)) => return Err(CliError::Usage("--max must be at least 1".into())),
        (_, None) => return Err(CliError::Usage("--max is required with --family".into())),
    };
    let top = *dims.last().expect("at least one row");
    let bound = match req.route {
        Route::Direct | Route::All => req.limits.direct_route,
        _ => req.limits.formula_routes,
    };
    Limits::check("table", top, bound)?;

    let rows: Vec<IntPoly> = dims
        .par_iter()
        .map(|&n| toric_g_row(&req.source, n, req.route, &req.limits))
        .collect::<CliResult<_>>()?;

    match req.format {
        Format::Csv => {
            let width = top / 2 + 1;
            let header: Vec<String> = (0..width).map(|k| format!("g{k}")).collect();
            writeln!(out, "n,{}", header.join(","))?;
            for (&n, g) in dims.iter().zip(&rows) {
                let cells: Vec<String> = (0..width)
                    .map(|k| {
                        if k <= n / 2 {
                            g.coeff(k).to_string()
                        } else {
                            String::new()
                        }
                    })
                    .collect();
                writeln!(out, "{n},{}", cells.join(","))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = dims
                .iter()
                .zip(&rows)
                .map(|(&n, g)| {
                    let coeffs: Vec<Value> = (0..=n / 2).map(|k| json_coeff(&g.coeff(k))).collect();
                    json!({ "n": n, "g": coeffs })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "source": req.source.label(),
                "route": route_name(req.route),
                "rows": rows,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("JSON values serialize")
            )?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Object {
    Dyck,
    ParkingFunctions123,
    ParkingTrees,
    BPerms,
}

impl FromStr for Object {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "dyck" => Ok(Object::Dyck),
            "parking_functions_123" => Ok(Object::ParkingFunctions123),
            "parking_trees" => Ok(Object::ParkingTrees),
            "b_perms" => Ok(Object::BPerms),
            _ => Err(CliError::Usage(format!(
                "unknown object {s:?} (dyck, parking_functions_123, parking_trees, b_perms)"
            ))),
        }
    }
}

pub struct EnumerateRequest {
    pub object: Object,
    pub n: usize,
    pub count_only: bool,
    /// Building set for `b_perms`.
    pub source: Option<Source>,
    pub limits: Limits,
}

/// One object per line in its canonical text form, or just the count.
pub fn cmd_enumerate(req: &EnumerateRequest, out: &mut dyn Write) -> CliResult<()> {
    let n = req.n;
    let lim = &req.limits;
    let mut count: u64 = 0;
    let mut emit = |line: &dyn std::fmt::Display, out: &mut dyn Write| -> io::Result<()> {
        count += 1;
        if req.count_only {
            Ok(())
        } else {
            writeln!(out, "{line}")
        }
    };
    match req.object {
        Object::Dyck => {
            Limits::check("Dyck words", n, lim.dyck_words)?;
            Limits::check("Dyck words", n, Word::MAX_LEN / 2)?;
            for w in enumerate_words(WordClass::Dyck(n)) {
                emit(&w, out)?;
            }
        }
        Object::ParkingFunctions123 => {
            for f in enumerate_123_avoiding_functions(n, true, lim)? {
                emit(&f, out)?;
            }
        }
        Object::ParkingTrees => {
            let mut failure = None;
            for_each_parking_tree(n, lim, |t, f| {
                if failure.is_some() {
                    return;
                }
                let tree = ParkingTree::from_tree_and_function(t.clone(), f)
                    .expect("fibers follow the children");
                if let Err(e) = emit(&tree, out) {
                    failure = Some(e);
                }
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
        }
        Object::BPerms => {
            let source = req.source.as_ref().ok_or_else(|| {
                CliError::Usage("b_perms needs --family or --building-set".into())
            })?;
            let bs = source.building_set(n)?;
            if bs.ground_size() as usize != n + 1 {
                return Err(CliError::Usage(format!(
                    "the building set lives on [{}], not on [{}]",
                    bs.ground_size(),
                    n + 1
                )));
            }
            for p in b_permutations(&bs, lim)? {
                emit(&p, out)?;
            }
        }
    }
    if req.count_only {
        writeln!(out, "{count}")?;
    }
    Ok(())
}

/// Applies `TORICG_THREADS` to the global rayon pool.
pub fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("TORICG_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "TORICG_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size the worker pool: {e}")))
}
