//! Building sets, B-permutations and the h/γ/toric g pipeline of chordal nestohedra.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::parking::{fn_ascents, fn_is_123_avoiding, next_arrangement, sorted_parents};
use crate::perms::{enumerate_increasing_012, Permutation};
use crate::polyvec::{toric_g_from_gamma, IntPoly};

pub const MAX_GROUND: u32 = 16;

fn members(mask: u32) -> Vec<u32> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

fn top(mask: u32) -> u32 {
    32 - mask.leading_zeros()
}

/// A family of nonempty subsets of `[m]`, stored as bitmasks (bit `i - 1` for `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BuildingSet {
    ground_size: u32,
    masks: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub connected: bool,
    pub chordal: bool,
}

#[derive(Serialize, Deserialize)]
struct BuildingSetFile {
    ground_size: u32,
    sets: Vec<Vec<u32>>,
}

impl BuildingSet {
    /// Collects `sets` (1-based members, duplicates merged). Only range checks
    /// happen here; see [`BuildingSet::validate`] for the building set axioms.
    pub fn new(ground_size: u32, sets: &[Vec<u32>]) -> Result<Self> {
        if ground_size == 0 || ground_size > MAX_GROUND {
            return Err(Error::OutOfRange {
                what: "ground size",
                value: ground_size.into(),
                bound: format!("1 <= m <= {MAX_GROUND}"),
            });
        }
        let mut masks = Vec::with_capacity(sets.len());
        for s in sets {
            if s.is_empty() {
                return Err(Error::BuildingSet {
                    reason: "empty member".into(),
                    witness: vec![Vec::new()],
                });
            }
            let mut mask = 0u32;
            for &x in s {
                if x == 0 || x > ground_size {
                    return Err(Error::BuildingSet {
                        reason: format!("element {x} outside [{ground_size}]"),
                        witness: vec![s.clone()],
                    });
                }
                mask |= 1 << (x - 1);
            }
            masks.push(mask);
        }
        Ok(BuildingSet::from_masks(ground_size, masks))
    }

    fn from_masks(ground_size: u32, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        BuildingSet { ground_size, masks }
    }

    pub fn ground_size(&self) -> u32 {
        self.ground_size
    }

    fn full(&self) -> u32 {
        (1u32 << self.ground_size) - 1
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    fn has(&self, mask: u32) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: &[u32]) -> bool {
        set.iter().all(|&x| x >= 1 && x <= self.ground_size) && self.has(to_mask(set))
    }

    /// Members ordered by size, then lexicographically.
    pub fn sets(&self) -> Vec<Vec<u32>> {
        self.masks
            .iter()
            .map(|&m| members(m))
            .sorted_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .collect()
    }

    /// Checks the singleton and union axioms, then reports connectedness and chordality.
    pub fn validate(&self) -> Result<Validation> {
        for i in 0..self.ground_size {
            if !self.has(1 << i) {
                return Err(Error::BuildingSet {
                    reason: format!("singleton {{{}}} missing", i + 1),
                    witness: vec![vec![i + 1]],
                });
            }
        }
        for (k, &a) in self.masks.iter().enumerate() {
            for &b in &self.masks[k + 1..] {
                if a & b != 0 && !self.has(a | b) {
                    return Err(Error::BuildingSet {
                        reason: "union of intersecting members missing".into(),
                        witness: vec![members(a), members(b)],
                    });
                }
            }
        }
        Ok(Validation {
            connected: self.has(self.full()),
            chordal: self.is_chordal(),
        })
    }

    /// Every suffix `{i_s < ... < i_r}` of every member is a member.
    fn is_chordal(&self) -> bool {
        self.masks.iter().all(|&m| {
            let mut rest = m;
            while rest != 0 {
                if !self.has(rest) {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        })
    }

    /// `B|_T`: the members contained in `t`.
    pub fn restrict(&self, t: &[u32]) -> Vec<Vec<u32>> {
        let tm = to_mask(t);
        BuildingSet::from_masks(
            self.ground_size,
            self.masks
                .iter()
                .copied()
                .filter(|&m| m & !tm == 0)
                .collect(),
        )
        .sets()
    }

    /// The connected components of `B|_T`: its inclusion-maximal members.
    pub fn components(&self, t: &[u32]) -> Vec<Vec<u32>> {
        let tm = to_mask(t);
        let inside: Vec<u32> = self
            .masks
            .iter()
            .copied()
            .filter(|&m| m & !tm == 0)
            .collect();
        inside
            .iter()
            .filter(|&&m| !inside.iter().any(|&o| o != m && o & m == m))
            .map(|&m| members(m))
            .sorted()
            .collect()
    }

    /// Whether `a` and `b` lie in one component of the restriction to `within`.
    fn joined(&self, within: u32, a: u32, b: u32) -> bool {
        let want = 1 << (a - 1) | 1 << (b - 1);
        self.masks
            .iter()
            .any(|&m| m & !within == 0 && m & want == want)
    }

    /// For each `i`, `π(i)` and `max(π(1..=i))` share a component of the
    /// restriction to `{π(1), ..., π(i)}`.
    pub fn is_b_permutation(&self, p: &Permutation) -> bool {
        if p.len() != self.ground_size as usize {
            return false;
        }
        let mut seen = 0u32;
        p.images().iter().all(|&x| {
            seen |= 1 << (x - 1);
            self.joined(seen, x, top(seen))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BuildingSetFile {
            ground_size: self.ground_size,
            sets: self.sets(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BuildingSetFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "building set JSON".into(),
            reason: format!("line {}, column {}: {e}", e.line(), e.column()),
        })?;
        BuildingSet::new(file.ground_size, &file.sets)
    }
}

fn to_mask(t: &[u32]) -> u32 {
    t.iter()
        .filter(|&&x| (1..=32).contains(&x))
        .fold(0, |m, &x| m | 1 << (x - 1))
}

/// Renders `{1},{2},{1,2}`.
impl fmt::Display for BuildingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .sets()
            .iter()
            .map(|s| format!("{{{}}}", s.iter().join(",")))
            .join(",");
        f.write_str(&text)
    }
}

/// The graphical building set: vertex sets of `[m]` inducing connected subgraphs.
pub fn graphical(m: u32, edges: &[(u32, u32)]) -> Result<BuildingSet> {
    if m == 0 || m > MAX_GROUND {
        return Err(Error::OutOfRange {
            what: "ground size",
            value: m.into(),
            bound: format!("1 <= m <= {MAX_GROUND}"),
        });
    }
    let mut adj = vec![0u32; m as usize];
    for &(a, b) in edges {
        if a == b || a == 0 || b == 0 || a > m || b > m {
            return Err(Error::precondition(format!(
                "edge {a}-{b} is not a simple edge on [{m}]"
            )));
        }
        adj[a as usize - 1] |= 1 << (b - 1);
        adj[b as usize - 1] |= 1 << (a - 1);
    }
    let connected = |s: u32| {
        let mut reached = s & s.wrapping_neg();
        loop {
            let grown = members(reached)
                .iter()
                .fold(reached, |r, &v| r | (adj[v as usize - 1] & s));
            if grown == reached {
                return reached == s;
            }
            reached = grown;
        }
    };
    Ok(BuildingSet::from_masks(
        m,
        (1u32..1 << m).filter(|&s| connected(s)).collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NamedFamily {
    Permutahedron,
    StanleyPitman,
    AssociahedronIntervals,
    /// Between the permutahedron (`r = 1`) and the stellohedron (`r = n`).
    Interpolation(u32),
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFamily::Permutahedron => f.write_str("permutahedron"),
            NamedFamily::StanleyPitman => f.write_str("stanley_pitman"),
            NamedFamily::AssociahedronIntervals => f.write_str("associahedron_intervals"),
            NamedFamily::Interpolation(r) => write!(f, "interpolation:{r}"),
        }
    }
}

/// Accepts `permutahedron`, `stanley_pitman`, `associahedron_intervals` and `interpolation:<r>`.
impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "permutahedron" => Ok(NamedFamily::Permutahedron),
            "stanley_pitman" => Ok(NamedFamily::StanleyPitman),
            "associahedron_intervals" | "intervals" => Ok(NamedFamily::AssociahedronIntervals),
            _ => s
                .strip_prefix("interpolation:")
                .and_then(|r| r.parse().ok())
                .map(NamedFamily::Interpolation)
                .ok_or_else(|| Error::parse(s, "unknown building set family")),
        }
    }
}

/// The named building set on `[n + 1]`.
pub fn named_family(kind: NamedFamily, n: u32) -> Result<BuildingSet> {
    let m = n + 1;
    if n == 0 || m > MAX_GROUND {
        return Err(Error::OutOfRange {
            what: "n",
            value: n.into(),
            bound: format!("1 <= n <= {}", MAX_GROUND - 1),
        });
    }
    let singletons = (0..m).map(|i| 1u32 << i);
    let interval = |i: u32, j: u32| ((1u32 << j) - 1) & !((1u32 << (i - 1)) - 1);
    let masks: Vec<u32> = match kind {
        NamedFamily::Permutahedron => (1u32..1 << m).collect(),
        NamedFamily::StanleyPitman => singletons.chain((1..=m).map(|i| interval(i, m))).collect(),
        NamedFamily::AssociahedronIntervals => (1..=m)
            .flat_map(|i| (i..=m).map(move |j| interval(i, j)))
            .collect(),
        NamedFamily::Interpolation(r) => {
            if r == 0 || r > n {
                return Err(Error::OutOfRange {
                    what: "r",
                    value: r.into(),
                    bound: format!("1 <= r <= {n}"),
                });
            }
            singletons
                .take(r as usize)
                .chain((1u32..1 << m).filter(|&s| top(s) > r))
                .collect()
        }
    };
    Ok(BuildingSet::from_masks(m, masks))
}

fn require_pipeline(bs: &BuildingSet) -> Result<usize> {
    let v = bs.validate()?;
    if !v.connected {
        return Err(Error::NotConnected);
    }
    if !v.chordal {
        return Err(Error::NotChordal);
    }
    Ok(bs.ground_size as usize - 1)
}

/// All B-permutations of `[n + 1]` in lexicographic order.
pub fn b_permutations(bs: &BuildingSet, limits: &Limits) -> Result<Vec<Permutation>> {
    if !bs.validate()?.connected {
        return Err(Error::NotConnected);
    }
    let m = bs.ground_size;
    Limits::check("B-permutations", m as usize - 1, limits.b_permutations)?;
    fn extend(bs: &BuildingSet, prefix: &mut Vec<u32>, seen: u32, out: &mut Vec<Permutation>) {
        let m = bs.ground_size;
        if prefix.len() == m as usize {
            out.push(Permutation::new(prefix.clone()).expect("prefix uses each value once"));
            return;
        }
        for x in 1..=m {
            let bit = 1 << (x - 1);
            if seen & bit != 0 {
                continue;
            }
            let now = seen | bit;
            if bs.joined(now, x, top(now)) {
                prefix.push(x);
                extend(bs, prefix, now, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(bs, &mut Vec::with_capacity(m as usize), 0, &mut out);
    Ok(out)
}

/// `h_i` = number of B-permutations with `i` descents (chordal `B` only).
pub fn h_chordal(bs: &BuildingSet, limits: &Limits) -> Result<Vec<BigInt>> {
    let n = require_pipeline(bs)?;
    let mut h = vec![BigInt::zero(); n + 1];
    for p in b_permutations(bs, limits)? {
        h[p.des()] += 1;
    }
    Ok(h)
}

/// `γ_j` = number of B-permutations with `j` descents, no double descent and no final descent.
pub fn gamma_chordal(bs: &BuildingSet, limits: &Limits) -> Result<Vec<BigInt>> {
    let n = require_pipeline(bs)?;
    let mut gamma = vec![BigInt::zero(); n / 2 + 1];
    for p in b_permutations(bs, limits)? {
        if !p.has_double_descent() && !p.has_final_descent() {
            gamma[p.des()] += 1;
        }
    }
    Ok(gamma)
}

pub fn toric_g_chordal(bs: &BuildingSet, limits: &Limits) -> Result<IntPoly> {
    let gamma = gamma_chordal(bs, limits)?;
    Ok(toric_g_from_gamma(bs.ground_size as usize - 1, &gamma))
}

/// Counts parking trees on `[n + 1]` whose edge labels encode a 123-avoiding
/// parking function, by weak ascents, keeping only trees whose underlying
/// 0-1-2 tree is the right-adjusted Foata–Strehl tree of a B-permutation.
pub fn toric_g_direct(bs: &BuildingSet, limits: &Limits) -> Result<IntPoly> {
    toric_g_direct_with(bs, limits, |_| true)
}

/// [`toric_g_direct`] restricted to vertex-labeled trees accepted by `keep`.
pub fn toric_g_direct_with<F>(bs: &BuildingSet, limits: &Limits, keep: F) -> Result<IntPoly>
where
    F: Fn(&crate::perms::PlaneTree) -> bool,
{
    let n = require_pipeline(bs)?;
    Limits::check("direct toric g route", n, limits.direct_route)?;
    let mut hist = vec![BigInt::zero(); n + 1];
    for t in enumerate_increasing_012(n + 1) {
        let shape = t.to_fs_tree()?.inorder();
        if !bs.is_b_permutation(&shape) || !keep(&t) {
            continue;
        }
        let mut f = sorted_parents(&t);
        loop {
            if fn_is_123_avoiding(&f) {
                hist[fn_ascents(&f)] += 1;
            }
            if !next_arrangement(&mut f) {
                break;
            }
        }
    }
    Ok(IntPoly::new(hist))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::all_permutations;
    use crate::polyvec::{gamma_family, h_to_gamma, Family};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn validation_examples() {
        let all = named_family(NamedFamily::Permutahedron, 2).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(
            all.validate().unwrap(),
            Validation {
                connected: true,
                chordal: true
            }
        );
        let iv = named_family(NamedFamily::AssociahedronIntervals, 2).unwrap();
        assert_eq!(iv.to_string(), "{1},{2},{3},{1,2},{2,3},{1,2,3}");
        assert!(iv.validate().unwrap().chordal);
        let cycle = graphical(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(
            cycle.validate().unwrap(),
            Validation {
                connected: true,
                chordal: false
            }
        );

        let missing = BuildingSet::new(2, &[vec![1], vec![1, 2]]).unwrap();
        assert!(
            matches!(missing.validate(), Err(Error::BuildingSet { witness, .. }) if witness == vec![vec![2]])
        );
        let open =
            BuildingSet::new(3, &[vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(matches!(
            open.validate(),
            Err(Error::BuildingSet { witness, .. }) if witness == vec![vec![1, 2], vec![2, 3]]
        ));
        assert!(BuildingSet::new(2, &[vec![3]]).is_err());
    }

    #[test]
    fn graphical_examples() {
        let path = graphical(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            path.sets(),
            vec![
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
        let k4 = graphical(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4, named_family(NamedFamily::Permutahedron, 3).unwrap());
        let empty = graphical(2, &[]).unwrap();
        assert_eq!(empty.sets(), vec![vec![1], vec![2]]);
        assert!(!empty.validate().unwrap().connected);
    }

    #[test]
    fn restriction_and_components() {
        let all = named_family(NamedFamily::Permutahedron, 2).unwrap();
        assert_eq!(all.restrict(&[1, 3]), vec![vec![1], vec![3], vec![1, 3]]);
        assert_eq!(all.components(&[1, 3]), vec![vec![1, 3]]);
        let iv = named_family(NamedFamily::AssociahedronIntervals, 3).unwrap();
        assert_eq!(iv.components(&[1, 3]), vec![vec![1], vec![3]]);
        assert!(iv.restrict(&[]).is_empty());
        assert!(iv.components(&[]).is_empty());
    }

    #[test]
    fn named_families() {
        let sp = named_family(NamedFamily::StanleyPitman, 2).unwrap();
        assert_eq!(
            sp.sets(),
            vec![vec![1], vec![2], vec![3], vec![2, 3], vec![1, 2, 3]]
        );
        for n in 1..=5 {
            assert_eq!(
                named_family(NamedFamily::Interpolation(1), n).unwrap(),
                named_family(NamedFamily::Permutahedron, n).unwrap()
            );
            let stello = named_family(NamedFamily::Interpolation(n), n).unwrap();
            assert!(stello
                .sets()
                .iter()
                .all(|s| s.len() == 1 || s.contains(&(n + 1))));
            for kind in [
                NamedFamily::Permutahedron,
                NamedFamily::StanleyPitman,
                NamedFamily::AssociahedronIntervals,
            ]
            .into_iter()
            .chain((1..=n).map(NamedFamily::Interpolation))
            {
                let v = named_family(kind, n).unwrap().validate().unwrap();
                assert_eq!(
                    v,
                    Validation {
                        connected: true,
                        chordal: true
                    },
                    "{kind} n={n}"
                );
            }
        }
        assert!(named_family(NamedFamily::Interpolation(4), 3).is_err());
        assert_eq!(
            "interpolation:2".parse::<NamedFamily>().unwrap(),
            NamedFamily::Interpolation(2)
        );
        assert!("interpolation:x".parse::<NamedFamily>().is_err());
    }

    #[test]
    fn b_permutation_classes() {
        let all = named_family(NamedFamily::Permutahedron, 2).unwrap();
        assert_eq!(b_permutations(&all, &lim()).unwrap().len(), 6);
        for n in 1..=6u32 {
            let iv = named_family(NamedFamily::AssociahedronIntervals, n).unwrap();
            let expected: Vec<Permutation> = all_permutations(n as usize + 1)
                .filter(|p| p.is_312_avoiding())
                .collect();
            assert_eq!(b_permutations(&iv, &lim()).unwrap(), expected);

            let sp = named_family(NamedFamily::StanleyPitman, n).unwrap();
            let unimodal: Vec<Permutation> = all_permutations(n as usize + 1)
                .filter(|p| {
                    let v = p.images();
                    let peak = v.iter().position(|&x| x as usize == v.len()).unwrap();
                    v[..=peak].windows(2).all(|w| w[0] < w[1])
                        && v[peak..].windows(2).all(|w| w[0] > w[1])
                })
                .collect();
            assert_eq!(b_permutations(&sp, &lim()).unwrap(), unimodal);
        }
        let tight = Limits {
            b_permutations: 2,
            ..Limits::default()
        };
        let big = named_family(NamedFamily::Permutahedron, 3).unwrap();
        assert!(matches!(
            b_permutations(&big, &tight),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn chordal_pipeline_examples() {
        let sp = named_family(NamedFamily::StanleyPitman, 2).unwrap();
        assert_eq!(h_chordal(&sp, &lim()).unwrap(), ints(&[1, 2, 1]));
        assert_eq!(gamma_chordal(&sp, &lim()).unwrap(), ints(&[1, 0]));
        let all = named_family(NamedFamily::Permutahedron, 2).unwrap();
        assert_eq!(h_chordal(&all, &lim()).unwrap(), ints(&[1, 4, 1]));
        assert_eq!(gamma_chordal(&all, &lim()).unwrap(), ints(&[1, 2]));
        let iv = named_family(NamedFamily::AssociahedronIntervals, 4).unwrap();
        assert_eq!(
            gamma_chordal(&iv, &lim()).unwrap(),
            gamma_family(Family::Associahedron, 4)
        );
        assert_eq!(gamma_chordal(&iv, &lim()).unwrap(), ints(&[1, 6, 2]));

        let cycle = graphical(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(h_chordal(&cycle, &lim()), Err(Error::NotChordal));
        assert_eq!(
            h_chordal(&graphical(3, &[(1, 2)]).unwrap(), &lim()),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn toric_g_routes_agree() {
        assert_eq!(
            toric_g_direct(
                &named_family(NamedFamily::Permutahedron, 2).unwrap(),
                &lim()
            )
            .unwrap(),
            IntPoly::from_i64s(&[1, 3])
        );
        assert_eq!(
            toric_g_direct(
                &named_family(NamedFamily::StanleyPitman, 3).unwrap(),
                &lim()
            )
            .unwrap(),
            IntPoly::from_i64s(&[1, 4])
        );
        assert_eq!(
            toric_g_chordal(
                &named_family(NamedFamily::AssociahedronIntervals, 4).unwrap(),
                &lim()
            )
            .unwrap(),
            IntPoly::from_i64s(&[1, 37, 10])
        );
        for n in 1..=4 {
            let kinds = [
                NamedFamily::Permutahedron,
                NamedFamily::StanleyPitman,
                NamedFamily::AssociahedronIntervals,
            ];
            for kind in kinds
                .into_iter()
                .chain((1..=n).map(NamedFamily::Interpolation))
            {
                let bs = named_family(kind, n).unwrap();
                let h = h_chordal(&bs, &lim()).unwrap();
                assert_eq!(h_to_gamma(&h).unwrap(), gamma_chordal(&bs, &lim()).unwrap());
                assert_eq!(
                    toric_g_chordal(&bs, &lim()).unwrap(),
                    toric_g_direct(&bs, &lim()).unwrap(),
                    "{kind} n={n}"
                );
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let bs = named_family(NamedFamily::StanleyPitman, 2).unwrap();
        let text = bs.to_json();
        assert_eq!(
            text,
            r#"{"ground_size":3,"sets":[[1],[2],[3],[2,3],[1,2,3]]}"#
        );
        assert_eq!(BuildingSet::from_json(&text).unwrap(), bs);
        let dup = r#"{"ground_size": 2, "sets": [[1],[2],[2,1],[1,2]]}"#;
        assert_eq!(BuildingSet::from_json(dup).unwrap().len(), 3);
        let err = BuildingSet::from_json("{\"ground_size\": 2,\n \"sets\": [[1],}").unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref reason, .. } if reason.starts_with("line 2")),
            "{err}"
        );
    }
}
