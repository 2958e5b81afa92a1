//! Exhaustive verification campaigns over all free trees up to an order.
//!
//! Every check walks the enumerated trees order by order, tests each one in
//! parallel and merges the results in enumeration order, so reports do not
//! depend on the number of workers. Some checks also sweep a second family
//! (subgraphs of a universal tree, realizable sequences, fixtures); those
//! rows carry the check name with a `:part` suffix.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::brute::{self, BruteLimits};
use crate::canon::{free_code, CanonicalCode};
use crate::eccentric::{in_family_d, in_family_f, EccentricSequence};
use crate::enumerate::enumerate_free_trees;
use crate::error::{Error, Result};
use crate::extremal::{fig2_spider, prop55, sharpness_chain, t_x};
use crate::graph::{Coloring, Tree};
use crate::params::{construct_bound_fixing_set, distinguishing_number, fixing_number, spider_profile};
use crate::universal::{branched_subgraphs, is_branched_subgraph_with, paint_cost_catalog, plain_catalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckId {
    Fd2,
    FdD,
    SpiderCap,
    OracleEq,
    RhoProps,
    UnivT,
    UnivU,
    EccBounds,
    EccProps,
    Lesniak,
    LeafFix,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        Self::Fd2,
        Self::FdD,
        Self::SpiderCap,
        Self::OracleEq,
        Self::RhoProps,
        Self::UnivT,
        Self::UnivU,
        Self::EccBounds,
        Self::EccProps,
        Self::Lesniak,
        Self::LeafFix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Fd2 => "fd-2",
            Self::FdD => "fd-D",
            Self::SpiderCap => "spider-cap",
            Self::OracleEq => "oracle-eq",
            Self::RhoProps => "rho-props",
            Self::UnivT => "univ-T",
            Self::UnivU => "univ-U",
            Self::EccBounds => "ecc-bounds",
            Self::EccProps => "ecc-props",
            Self::Lesniak => "lesniak",
            Self::LeafFix => "leaf-fix",
        }
    }

    /// Smallest order the check looks at.
    fn n_min(self) -> usize {
        match self {
            Self::Fd2 | Self::FdD => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "check",
                name: s.to_string(),
            })
    }
}

/// A failed assertion on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub part: String,
    pub n: usize,
    pub code: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignRow {
    pub check: String,
    pub n: usize,
    pub instances: usize,
    pub violations: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub check: CheckId,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<CampaignRow>,
    pub violations: Vec<Violation>,
    /// Trees meeting a density bound with equality, as `(n, free code)`.
    pub equality_cases: Vec<(usize, String)>,
    /// Observations that are not violations (caps applied, coverage).
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl CampaignReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn instances(&self) -> usize {
        self.rows.iter().map(|r| r.instances).sum()
    }

    /// `check,n,instances,violations,seconds`
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,n,instances,violations,seconds\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{:.3}",
                r.check, r.n, r.instances, r.violations, r.seconds
            );
        }
        out
    }
}

/// Worker count and brute-force caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignOptions {
    /// `None` uses all available cores.
    pub jobs: Option<usize>,
    pub limits: BruteLimits,
    /// Largest order for the paint cost sweep.
    pub rho_cap: usize,
    /// Most branched subgraphs a universal check will enumerate.
    pub subgraph_limit: u64,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        Self {
            jobs: None,
            limits: BruteLimits::default(),
            rho_cap: 9,
            subgraph_limit: 100_000,
        }
    }
}

impl CampaignOptions {
    /// Defaults, with `SYMTREE_BRUTE_LIMIT` applied to every brute cap.
    pub fn from_env() -> Self {
        let mut o = Self::default();
        if std::env::var_os("SYMTREE_BRUTE_LIMIT").is_some() {
            o.limits = BruteLimits::from_env();
            o.rho_cap = o.limits.spectrum;
        }
        o
    }
}

#[derive(Default)]
struct Outcome {
    counted: bool,
    equality: bool,
    failures: Vec<String>,
}

impl Outcome {
    fn counted() -> Self {
        Self {
            counted: true,
            ..Self::default()
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }
}

struct Ctx {
    check: CheckId,
    opts: CampaignOptions,
    /// Free codes of the equality cases allowed for `fd-2`.
    fd2_extremal: BTreeSet<CanonicalCode>,
    univ_t: Vec<(usize, crate::universal::BranchCatalog)>,
    univ_u: crate::universal::BranchCatalog,
}

pub fn run_campaign(check: CheckId, n_max: usize) -> Result<CampaignReport> {
    run_campaign_with(check, n_max, &CampaignOptions::from_env())
}

pub fn run_campaign_with(check: CheckId, n_max: usize, opts: &CampaignOptions) -> Result<CampaignReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start workers: {e}")))?;
    pool.install(|| run_inner(check, n_max, opts))
}

fn run_inner(check: CheckId, n_max: usize, opts: &CampaignOptions) -> Result<CampaignReport> {
    let start = Instant::now();
    let mut notes = Vec::new();
    let cap = match check {
        CheckId::OracleEq => opts.limits.group,
        CheckId::RhoProps => opts.rho_cap,
        CheckId::UnivU => opts.limits.spectrum.max(12),
        _ => usize::MAX,
    };
    let hi = n_max.min(cap);
    if hi < n_max {
        notes.push(format!("{check}: sweep capped at n = {hi} by the brute-force limit"));
    }
    let ctx = Ctx {
        check,
        opts: *opts,
        fd2_extremal: (1..=2)
            .map(|k| free_code(&sharpness_chain(k).expect("k >= 1")))
            .chain(std::iter::once(free_code(&fig2_spider())))
            .collect(),
        univ_t: if check == CheckId::UnivT {
            vec![(2, plain_catalog(2, 2)?), (3, plain_catalog(2, 3)?)]
        } else {
            Vec::new()
        },
        univ_u: paint_cost_catalog(2, 2)?,
    };
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut equality_cases = Vec::new();
    let mut sequences_seen: BTreeSet<EccentricSequence> = BTreeSet::new();
    let lo = check.n_min();
    for n in lo..=hi {
        let t0 = Instant::now();
        let trees: Vec<Tree> = enumerate_free_trees(n)?.collect();
        let outcomes: Vec<Outcome> = trees.par_iter().map(|t| per_tree(&ctx, t)).collect();
        let mut instances = 0;
        let mut bad = 0;
        for (t, o) in trees.iter().zip(outcomes) {
            instances += usize::from(o.counted);
            if !o.failures.is_empty() {
                bad += 1;
            }
            let code = free_code(t).to_string();
            if o.equality {
                equality_cases.push((n, code.clone()));
            }
            for detail in o.failures {
                violations.push(Violation {
                    part: check.name().to_string(),
                    n,
                    code: code.clone(),
                    detail,
                });
            }
        }
        if check == CheckId::Lesniak {
            sequences_seen.extend(trees.iter().map(EccentricSequence::of));
        }
        rows.push(CampaignRow {
            check: check.name().to_string(),
            n,
            instances,
            violations: bad,
            seconds: t0.elapsed().as_secs_f64(),
        });
    }
    match check {
        CheckId::UnivT => {
            for (d, cat) in &ctx.univ_t {
                let part = format!("univ-T:subgraphs-D{d}");
                universal_part(&part, cat, opts, &mut rows, &mut violations, &mut notes, |t, lim| {
                    plain_subgraph_check(t, *d, lim)
                })?;
            }
        }
        CheckId::UnivU => {
            universal_part("univ-U:subgraphs-D2", &ctx.univ_u, opts, &mut rows, &mut violations, &mut notes, |t, lim| {
                paint_subgraph_check(t, 2, lim)
            })?;
        }
        CheckId::EccProps => prop55_part(&mut rows, &mut violations),
        CheckId::Lesniak => lesniak_part(hi, &sequences_seen, &mut rows, &mut violations)?,
        _ => {}
    }
    Ok(CampaignReport {
        check,
        n_min: lo,
        n_max: hi,
        rows,
        violations,
        equality_cases,
        notes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn per_tree(ctx: &Ctx, t: &Tree) -> Outcome {
    let n = t.order();
    match ctx.check {
        CheckId::Fd2 => {
            let d = distinguishing_number(t);
            if d != 2 {
                return Outcome::default();
            }
            let mut o = Outcome::counted();
            let (f, _) = fixing_number(t);
            o.require(11 * f <= 4 * n, || format!("F/n = {f}/{n} exceeds 4/11"));
            if 11 * f == 4 * n {
                let spider = spider_profile(t).is_ok();
                o.equality = true;
                o.require(ctx.fd2_extremal.contains(&free_code(t)), || {
                    format!("attains 4/11 but is not a known extremal tree (spider: {spider})")
                });
            }
            o
        }
        CheckId::FdD => {
            let d = distinguishing_number(t);
            if d < 3 {
                return Outcome::default();
            }
            let mut o = Outcome::counted();
            let (f, _) = fixing_number(t);
            o.require(f * (d + 1) <= (d - 1) * n, || {
                format!("F/n = {f}/{n} exceeds (D-1)/(D+1) with D = {d}")
            });
            o.equality = f * (d + 1) == (d - 1) * n;
            o
        }
        CheckId::SpiderCap => {
            let Ok(p) = spider_profile(t) else {
                return Outcome::default();
            };
            let mut o = Outcome::counted();
            let d = distinguishing_number(t);
            for (&k, &nk) in &p.counts {
                let cap = BigUint::from(d).pow(k as u32);
                o.require(BigUint::from(nk) <= cap, || format!("n_{k} = {nk} > D^{k} with D = {d}"));
            }
            o
        }
        CheckId::OracleEq => {
            let mut o = Outcome::counted();
            let lim = ctx.opts.limits;
            let (d, f) = (distinguishing_number(t), fixing_number(t).0);
            match (
                brute::brute_distinguishing_number(t.graph(), &lim),
                brute::brute_fixing_number(t.graph(), &lim),
            ) {
                (Ok((bd, _)), Ok((bf, _))) => {
                    o.require(d == bd, || format!("D: fast {d}, brute {bd}"));
                    o.require(f == bf, || format!("F: fast {f}, brute {bf}"));
                }
                (Err(e), _) | (_, Err(e)) => o.failures.push(format!("oracle error: {e}")),
            }
            o
        }
        CheckId::RhoProps => {
            let mut o = Outcome::counted();
            match brute::paint_cost_spectrum(t.graph(), &BruteLimits::uniform(n)) {
                Ok(s) => {
                    let (d, f) = (s.distinguishing, s.fixing);
                    o.require(s.costs.windows(2).all(|w| w[0] >= w[1]), || {
                        format!("spectrum {:?} not monotone", s.costs)
                    });
                    o.require(s.costs.last() == Some(&f), || {
                        format!("rho^(F+1) = {:?} but F = {f}", s.costs.last())
                    });
                    o.require(d <= f + 1, || format!("D = {d} > F + 1 = {}", f + 1));
                    o.require(f * d <= (d - 1) * n, || format!("F = {f} > (D-1)n/D with D = {d}"));
                    o.require(d == distinguishing_number(t) && f == fixing_number(t).0, || {
                        "spectrum endpoints disagree with the fast values".into()
                    });
                }
                Err(e) => o.failures.push(format!("oracle error: {e}")),
            }
            o
        }
        CheckId::UnivT => {
            if t.radius() > 2 {
                return Outcome::default();
            }
            let mut o = Outcome::counted();
            let dt = distinguishing_number(t);
            for (d, cat) in &ctx.univ_t {
                let member = is_branched_subgraph_with(t, 2, cat).expect("radius checked");
                o.require(member == (dt <= *d), || {
                    format!("membership in T_2^{d} is {member} but D = {dt}")
                });
            }
            o
        }
        CheckId::UnivU => {
            if t.radius() > 2 {
                return Outcome::default();
            }
            let mut o = Outcome::counted();
            let member = is_branched_subgraph_with(t, 2, &ctx.univ_u).expect("radius checked");
            let property = paint_property(t, 2, &BruteLimits::uniform(n.max(ctx.opts.limits.spectrum)));
            match property {
                Ok(p) => o.require(member == p, || {
                    format!("membership in U_2^2 is {member} but (D <= 2 and rho^2 = F) is {p}")
                }),
                Err(e) => o.failures.push(format!("oracle error: {e}")),
            }
            o
        }
        CheckId::EccBounds => {
            let mut o = Outcome::counted();
            let x = EccentricSequence::of(t);
            if !in_family_d(t) {
                let (d, m) = (distinguishing_number(t), x.distinguishing_bound_m());
                o.require(d as i64 <= m, || format!("D = {d} > M = {m} for {x}"));
            }
            if !in_family_f(t) {
                let (f, b) = (fixing_number(t).0, x.fixing_bound());
                o.require(f as i64 <= b, || format!("F = {f} > bound {b} for {x}"));
            }
            o
        }
        CheckId::EccProps => {
            let mut o = Outcome::counted();
            let x = EccentricSequence::of(t);
            let f = fixing_number(t).0;
            let lb = x.prop53_lower_bound();
            o.require(f >= lb, || format!("F = {f} below the lower bound {lb} for {x}"));
            if x.prop54_not_asymmetric() {
                o.require(f >= 1, || format!("asymmetric tree with eventually increasing {x}"));
            }
            o
        }
        CheckId::Lesniak => {
            let mut o = Outcome::counted();
            let x = EccentricSequence::of(t);
            o.require(x.lesniak_realizable(), || format!("{x} fails the realizability conditions"));
            o
        }
        CheckId::LeafFix => {
            let mut o = Outcome::counted();
            let (f, w) = fixing_number(t);
            o.require(w.len() == f, || format!("witness size {} != F = {f}", w.len()));
            o.require(w.iter().all(|&v| t.degree(v) <= 1), || format!("witness {w:?} has a non-leaf"));
            let lim = ctx.opts.limits;
            if n <= lim.group {
                let c = Coloring::individualizing(n, &w);
                o.require(brute::is_distinguishing(t.graph(), &c, &lim).unwrap_or(false), || {
                    format!("witness {w:?} does not fix the tree")
                });
            }
            if (3..=10).contains(&n) {
                let set = construct_bound_fixing_set(t).expect("n >= 3");
                let c = Coloring::individualizing(n, &set);
                o.require(brute::is_distinguishing(t.graph(), &c, &lim).unwrap_or(false), || {
                    format!("piecewise set {set:?} does not fix the tree")
                });
                let d = distinguishing_number(t);
                let s = set.len();
                if d == 2 {
                    o.require(11 * s <= 4 * n, || format!("piecewise set of size {s} exceeds 4n/11"));
                } else if d >= 3 {
                    o.require(s * (d + 1) <= (d - 1) * n, || {
                        format!("piecewise set of size {s} exceeds (D-1)n/(D+1), D = {d}")
                    });
                }
            }
            o
        }
    }
}

/// `D(T) <= d` and `rho^d(T) = F(T)`, exhaustively.
fn paint_property(t: &Tree, d: usize, lim: &BruteLimits) -> Result<bool> {
    let (bd, _) = brute::brute_distinguishing_number(t.graph(), lim)?;
    if bd > d {
        return Ok(false);
    }
    let (rho, _) = brute::brute_paint_cost(t.graph(), d, lim)?;
    let (f, _) = brute::brute_fixing_number(t.graph(), lim)?;
    Ok(rho == f)
}

/// Subgraph of `T_2^d`: must be `d`-distinguishable. Exhaustive when the
/// order allows, by the counting recursion otherwise. Returns the failure.
fn plain_subgraph_check(t: &Tree, d: usize, lim: &BruteLimits) -> Result<Option<String>> {
    if t.order() <= lim.group {
        let found = brute::find_distinguishing_coloring(t.graph(), d, lim)?;
        return Ok(found.is_none().then(|| format!("no distinguishing {d}-coloring (exhaustive)")));
    }
    let dt = distinguishing_number(t);
    Ok((dt > d).then(|| format!("D = {dt} > {d}")))
}

fn paint_subgraph_check(t: &Tree, d: usize, lim: &BruteLimits) -> Result<Option<String>> {
    let (bd, _) = brute::brute_distinguishing_number(t.graph(), lim)?;
    if bd > d {
        return Ok(Some(format!("D = {bd} > {d}")));
    }
    let (rho, _) = brute::brute_paint_cost(t.graph(), d, lim)?;
    let (f, _) = brute::brute_fixing_number(t.graph(), lim)?;
    Ok((rho != f).then(|| format!("rho^{d} = {rho} but F = {f}")))
}

/// Sweeps the radius-2 branched subgraphs of a catalog's tree.
#[allow(clippy::too_many_arguments)]
fn universal_part(
    part: &str,
    cat: &crate::universal::BranchCatalog,
    opts: &CampaignOptions,
    rows: &mut Vec<CampaignRow>,
    violations: &mut Vec<Violation>,
    notes: &mut Vec<String>,
    check: impl Fn(&Tree, &BruteLimits) -> Result<Option<String>> + Sync,
) -> Result<()> {
    let codes: Vec<CanonicalCode> = branched_subgraphs(cat, opts.subgraph_limit)?.collect();
    let trees: Vec<(CanonicalCode, Tree)> = codes
        .into_iter()
        .map(|c| {
            let t = c.to_rooted_tree().tree().clone();
            (c, t)
        })
        .filter(|(_, t)| t.radius() == 2)
        .collect();
    // subgraphs up to 17 vertices are small enough for the exhaustive search
    let lim = BruteLimits {
        group: opts.limits.group.max(17),
        spectrum: opts.limits.spectrum.max(12),
        ..opts.limits
    };
    let results: Vec<(Result<Option<String>>, f64)> = trees
        .par_iter()
        .map(|(_, t)| {
            let t0 = Instant::now();
            let r = check(t, &lim);
            (r, t0.elapsed().as_secs_f64())
        })
        .collect();
    let mut by_n: std::collections::BTreeMap<usize, (usize, usize, f64)> = Default::default();
    let mut exhaustive = 0;
    for ((code, t), (r, secs)) in trees.iter().zip(results) {
        let entry = by_n.entry(t.order()).or_default();
        entry.0 += 1;
        entry.2 += secs;
        exhaustive += usize::from(t.order() <= lim.group);
        let failure = match r {
            Ok(f) => f,
            Err(e) => Some(format!("oracle error: {e}")),
        };
        if let Some(detail) = failure {
            entry.1 += 1;
            violations.push(Violation {
                part: part.to_string(),
                n: t.order(),
                code: code.to_string(),
                detail,
            });
        }
    }
    notes.push(format!(
        "{part}: {} radius-2 subgraphs, {exhaustive} checked exhaustively",
        trees.len()
    ));
    for (n, (inst, bad, secs)) in by_n {
        rows.push(CampaignRow {
            check: part.to_string(),
            n,
            instances: inst,
            violations: bad,
            seconds: secs,
        });
    }
    Ok(())
}

fn prop55_part(rows: &mut Vec<CampaignRow>, violations: &mut Vec<Violation>) {
    let t0 = Instant::now();
    let mut instances = 0;
    let mut bad = 0;
    for r in 1..=6 {
        for k in 2..=r + 1 {
            instances += 1;
            let t = prop55(r, k).expect("valid range");
            let counts: Vec<usize> = std::iter::once(1).chain(std::iter::repeat_n(k, r)).collect();
            let expect = EccentricSequence::from_counts(r, &counts).expect("valid");
            let got = EccentricSequence::of(&t);
            let f = fixing_number(&t).0;
            if got != expect || f != 1 {
                bad += 1;
                violations.push(Violation {
                    part: "ecc-props:prop55".into(),
                    n: t.order(),
                    code: free_code(&t).to_string(),
                    detail: format!("r = {r}, k = {k}: sequence {got}, F = {f}"),
                });
            }
        }
    }
    rows.push(CampaignRow {
        check: "ecc-props:prop55".into(),
        n: 0,
        instances,
        violations: bad,
        seconds: t0.elapsed().as_secs_f64(),
    });
}

fn lesniak_part(
    n_max: usize,
    seen: &BTreeSet<EccentricSequence>,
    rows: &mut Vec<CampaignRow>,
    violations: &mut Vec<Violation>,
) -> Result<()> {
    let mut by_n: std::collections::BTreeMap<usize, (usize, usize, f64)> = Default::default();
    for x in EccentricSequence::realizable_up_to(n_max) {
        let t0 = Instant::now();
        let entry = by_n.entry(x.total()).or_default();
        entry.0 += 1;
        let built = t_x(&x)?;
        let realized_by_tx = EccentricSequence::of(&built) == x;
        if !seen.contains(&x) || !realized_by_tx {
            entry.1 += 1;
            violations.push(Violation {
                part: "lesniak:sequences".into(),
                n: x.total(),
                code: x.to_string(),
                detail: format!("realizable sequence not realized (T_X realizes it: {realized_by_tx})"),
            });
        }
        entry.2 += t0.elapsed().as_secs_f64();
    }
    for (n, (inst, bad, secs)) in by_n {
        rows.push(CampaignRow {
            check: "lesniak:sequences".into(),
            n,
            instances: inst,
            violations: bad,
            seconds: secs,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(jobs: usize) -> CampaignOptions {
        CampaignOptions {
            jobs: Some(jobs),
            ..CampaignOptions::default()
        }
    }

    #[test]
    fn ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn small_campaigns_are_clean() {
        for check in [CheckId::Fd2, CheckId::FdD, CheckId::SpiderCap, CheckId::LeafFix, CheckId::Lesniak] {
            let r = run_campaign_with(check, 8, &opts(2)).unwrap();
            assert!(r.is_clean(), "{check}: {:?}", r.violations);
            assert!(r.instances() > 0);
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let a = run_campaign_with(CheckId::OracleEq, 8, &opts(1)).unwrap();
        let b = run_campaign_with(CheckId::OracleEq, 8, &opts(4)).unwrap();
        let strip = |r: &CampaignReport| -> Vec<_> {
            r.rows.iter().map(|x| (x.check.clone(), x.n, x.instances, x.violations)).collect()
        };
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.violations, b.violations);
        assert!(a.to_csv().starts_with("check,n,instances,violations,seconds\n"));
    }

    #[test]
    fn caps_are_reported() {
        let r = run_campaign_with(CheckId::RhoProps, 11, &opts(2)).unwrap();
        assert_eq!(r.n_max, 9);
        assert!(r.notes.iter().any(|s| s.contains("capped")));
        assert!(r.is_clean(), "{:?}", r.violations);
    }
}
