//! Acceptance suite: one PASS/FAIL line per criterion, exact tolerances.
//!
//! Two criteria are known to be unattainable as stated and print FAIL:
//!
//! * 8: the double star with two leaves on each center is a radius-2
//!   branched subgraph of `U_2^2` with `rho^2 = 3` but `F = 2`.
//! * 10: `D(T_X) = M(X)` fails exactly when `T_X` is a path, a star or
//!   `S_{r,r,1}`, all members of the exceptional family where the upper
//!   bound `M` is known not to apply.
//!
//! The test asserts that every other criterion passes and that these two
//! fail on exactly the analysed instances and nothing else.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::Ratio;

use symtree::brute::{self, BruteLimits};
use symtree::campaign::{run_campaign_with, CampaignOptions, CampaignReport, CheckId};
use symtree::canon::{free_code, CanonicalCode};
use symtree::eccentric::{in_family_d, EccentricSequence};
use symtree::extremal::{fig2_spider, gk_certificates, prop55, t_x, tk_family};
use symtree::graph::{Graph, Tree};
use symtree::params::{distinguishing_number, fixing_density, fixing_number};
use symtree::universal::{build_universal_T, build_universal_U, paint_cost_catalog, plain_catalog, DEFAULT_VERTEX_BUDGET};

struct Outcome {
    id: u8,
    pass: bool,
    detail: String,
    /// For known failures: whether the failure is exactly the analysed one.
    as_analysed: Option<bool>,
}

fn line(o: &Outcome) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {:>2}: {verdict} {}", o.id, o.detail);
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let e = start.elapsed();
    (e < limit, format!("{:.2}s < {}s", e.as_secs_f64(), limit.as_secs()))
}

fn campaign(check: CheckId, n_max: usize) -> CampaignReport {
    run_campaign_with(check, n_max, &CampaignOptions::default()).expect("campaign runs")
}

fn star(i: usize) -> CanonicalCode {
    CanonicalCode::from_children(std::iter::repeat_n(CanonicalCode::leaf(), i))
}

fn binom(n: usize, k: usize) -> BigUint {
    BigUint::from(num_integer::binomial(n as u64, k as u64))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let t = fig2_spider();
    let (n, d, f, density) = (t.order(), distinguishing_number(&t), fixing_number(&t).0, fixing_density(&t));
    let lim = BruteLimits::default();
    let (bd, _) = brute::brute_distinguishing_number(t.graph(), &lim).unwrap();
    let (bf, _) = brute::brute_fixing_number(t.graph(), &lim).unwrap();
    let (fast_enough, time) = within(start, Duration::from_secs(1));
    let pass = (n, d, f, density) == (11, 2, 4, Ratio::new(4, 11)) && bd == d && bf == f && fast_enough;
    Outcome {
        id: 1,
        pass,
        detail: format!("spider 1,1,2,2,2,2 (n, D, F, density) = ({n}, {d}, {f}, {density}), brute D = {bd}, F = {bf}, {time}"),
        as_analysed: None,
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let s = brute::paint_cost_spectrum(&c6, &BruteLimits::default()).unwrap();
    let (fast_enough, time) = within(start, Duration::from_secs(5));
    Outcome {
        id: 2,
        pass: s.distinguishing == 2 && s.costs == vec![3, 2] && fast_enough,
        detail: format!("C6 spectrum ({}; {:?}), {time}", s.distinguishing, s.costs),
        as_analysed: None,
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = campaign(CheckId::Fd2, 14);
    let fig2 = free_code(&fig2_spider()).to_string();
    let only_fig2 = r.equality_cases == vec![(11, fig2)];
    let (fast_enough, time) = within(start, Duration::from_secs(600));
    Outcome {
        id: 3,
        pass: r.is_clean() && only_fig2 && r.n_max == 14 && fast_enough,
        detail: format!(
            "fd-2 over 3..=14: {} trees with D = 2, {} violations, 4/11 attained by {:?}, {time}",
            r.instances(),
            r.violations.len(),
            r.equality_cases
        ),
        as_analysed: None,
    }
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = campaign(CheckId::FdD, 12);
    let mut fixtures = Vec::new();
    let mut fixtures_ok = true;
    for (k, d) in [(1, 3), (2, 3), (1, 4)] {
        let t = tk_family(k, d).unwrap();
        let (n, dt, f) = (t.order(), distinguishing_number(&t), fixing_number(&t).0);
        fixtures_ok &= n == k * (d + 1) && f == k * (d - 1) && dt == d && f * (d + 1) == (d - 1) * n;
        fixtures.push(format!("T_{k}(D={d}): n = {n}, F = {f}, D = {dt}"));
    }
    let (fast_enough, time) = within(start, Duration::from_secs(300));
    Outcome {
        id: 4,
        pass: r.is_clean() && fixtures_ok && fast_enough,
        detail: format!(
            "fd-D over n <= 12: {} trees with D >= 3, {} violations; {}; {time}",
            r.instances(),
            r.violations.len(),
            fixtures.join("; ")
        ),
        as_analysed: None,
    }
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let r = campaign(CheckId::OracleEq, 12);
    let at12 = r.rows.iter().find(|row| row.n == 12).map_or(0, |row| row.instances);
    let (fast_enough, time) = within(start, Duration::from_secs(900));
    Outcome {
        id: 5,
        pass: r.is_clean() && at12 == 551 && fast_enough,
        detail: format!(
            "oracle-eq over n <= 12: {} trees ({at12} at n = 12), {} mismatches, {time}",
            r.instances(),
            r.violations.len()
        ),
        as_analysed: None,
    }
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut degrees = Vec::new();
    for d in 2..=4usize {
        let cat = plain_catalog(2, d).unwrap();
        let deg = cat.root_degree();
        ok &= deg == BigUint::from(d << d);
        degrees.push(format!("D={d}: {deg}"));
        ok &= cat.capacity(&star(0)) == BigUint::from(d);
        ok &= cat.capacity(&star(1)) == BigUint::from(d * d);
        for i in 2..=d {
            ok &= cat.capacity(&star(i)) == BigUint::from(d) * binom(d, i);
        }
    }
    let o2 = build_universal_T(2, 2, DEFAULT_VERTEX_BUDGET, false).unwrap().tree.unwrap().order();
    let o3 = build_universal_T(2, 3, DEFAULT_VERTEX_BUDGET, false).unwrap().tree.unwrap().order();
    ok &= o2 == 17 && o3 == 61;
    Outcome {
        id: 6,
        pass: ok,
        detail: format!(
            "T_2^D root degrees [{}], |T_2^2| = {o2}, |T_2^3| = {o3}, multiplicities D, D^2, D·binom(D,i) checked for D = 2..4",
            degrees.join(", ")
        ),
        as_analysed: None,
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let r = campaign(CheckId::UnivT, 12);
    let d2_rows: Vec<_> = r.rows.iter().filter(|row| row.check == "univ-T:subgraphs-D2").collect();
    let d2_subgraphs: usize = d2_rows.iter().map(|row| row.instances).sum();
    let d2_max_order = d2_rows.iter().map(|row| row.n).max().unwrap_or(0);
    let members: usize = r.rows.iter().filter(|row| row.check == "univ-T").map(|row| row.instances).sum();
    let (fast_enough, time) = within(start, Duration::from_secs(600));
    // subgraphs of T_2^2 reach 17 vertices, all inside the exhaustive cap of 17
    Outcome {
        id: 7,
        pass: r.is_clean() && d2_subgraphs > 0 && d2_max_order <= 17 && fast_enough,
        detail: format!(
            "{members} trees of radius <= 2 (n <= 12) tested for membership against D = 2, 3; {d2_subgraphs} radius-2 subgraphs of T_2^2 (up to {d2_max_order} vertices) brute-verified; {} violations; {time}",
            r.violations.len()
        ),
        as_analysed: None,
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let r = campaign(CheckId::UnivU, 12);
    let mut mult_ok = true;
    for d in 2..=5usize {
        let cat = paint_cost_catalog(2, d).unwrap();
        mult_ok &= cat.capacity(&star(0)) == BigUint::from(d);
        mult_ok &= cat.capacity(&star(1)) == BigUint::from(2 * d - 1);
        for i in 2..=d {
            mult_ok &= cat.capacity(&star(i)) == binom(d - 1, i - 1);
        }
    }
    let u3 = build_universal_U(2, 3, DEFAULT_VERTEX_BUDGET, false, false).unwrap().tree.unwrap().order();
    mult_ok &= u3 == 24;
    let double_star = free_code(&Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()).to_string();
    let failing: Vec<(String, String)> = r.violations.iter().map(|v| (v.part.clone(), v.code.clone())).collect();
    let analysed = vec![
        ("univ-U".to_string(), double_star.clone()),
        ("univ-U:subgraphs-D2".to_string(), double_star),
    ];
    let details: Vec<String> = r.violations.iter().map(|v| format!("[{}] {} {}", v.part, v.code, v.detail)).collect();
    Outcome {
        id: 8,
        pass: r.is_clean() && mult_ok,
        detail: format!(
            "U_2^D multiplicities ok: {mult_ok}, |U_2^3| = {u3}; {} instances, {} violations {:?}; {:.2}s",
            r.instances(),
            r.violations.len(),
            details,
            start.elapsed().as_secs_f64()
        ),
        as_analysed: Some(mult_ok && failing == analysed),
    }
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let reports: Vec<CampaignReport> = [CheckId::EccBounds, CheckId::EccProps, CheckId::Lesniak]
        .into_iter()
        .map(|c| campaign(c, 12))
        .collect();
    let realizable: usize = reports[2]
        .rows
        .iter()
        .filter(|row| row.check == "lesniak:sequences")
        .map(|row| row.instances)
        .sum();
    let (fast_enough, time) = within(start, Duration::from_secs(1200));
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: {} instances, {} violations", r.check, r.instances(), r.violations.len()))
        .collect();
    Outcome {
        id: 9,
        pass: reports.iter().all(CampaignReport::is_clean) && realizable > 0 && fast_enough,
        detail: format!("{}; {realizable} realizable sequences with sum <= 12 all realized; {time}", summary.join("; ")),
        as_analysed: None,
    }
}

fn criterion_10() -> Outcome {
    let wide: EccentricSequence = "3^(1) 4^(3) 5^(5) 6^(4)".parse().unwrap();
    let mut total = 0;
    let mut seq_ok = true;
    let mut failing = Vec::new();
    let mut failing_outside_family = Vec::new();
    for x in EccentricSequence::realizable_up_to(12).into_iter().chain(std::iter::once(wide.clone())) {
        total += 1;
        let t = t_x(&x).unwrap();
        seq_ok &= EccentricSequence::of(&t) == x;
        let (d, m) = (distinguishing_number(&t), x.distinguishing_bound_m());
        if d as i64 != m {
            failing.push(format!("{x} (D = {d}, M = {m})"));
            if !in_family_d(&t) {
                failing_outside_family.push(x.to_string());
            }
        }
    }
    let wide_d = distinguishing_number(&t_x(&wide).unwrap());
    let pass = seq_ok && failing.is_empty() && wide_d == 3;
    Outcome {
        id: 10,
        pass,
        detail: format!(
            "{total} sequences, X(T_X) = X for all: {seq_ok}; 3^(1) 4^(3) 5^(5) 6^(4) has D = {wide_d}; D != M for {} sequences {:?}, of which outside the exceptional family: {:?}",
            failing.len(),
            failing,
            failing_outside_family
        ),
        as_analysed: Some(seq_ok && wide_d == 3 && !failing.is_empty() && failing_outside_family.is_empty()),
    }
}

fn criterion_11() -> Outcome {
    let mut ok = true;
    let mut count = 0;
    for r in 1..=6 {
        for k in 2..=r + 1 {
            count += 1;
            let t = prop55(r, k).unwrap();
            let counts: Vec<usize> = std::iter::once(1).chain(std::iter::repeat_n(k, r)).collect();
            let expect = EccentricSequence::from_counts(r, &counts).unwrap();
            ok &= EccentricSequence::of(&t) == expect && fixing_number(&t).0 == 1;
        }
    }
    Outcome {
        id: 11,
        pass: ok,
        detail: format!("{count} constructions with 2 <= k <= r + 1 <= 7: F = 1 and sequence (r, (r+1)^(k), ..., (2r)^(k))"),
        as_analysed: None,
    }
}

fn criterion_12() -> Outcome {
    let start = Instant::now();
    let c = gk_certificates(7, 2).unwrap();
    let (fast_enough, time) = within(start, Duration::from_secs(60));
    Outcome {
        id: 12,
        pass: c.base_asymmetric
            && c.order == 261
            && c.swaps_verified == 127
            && c.swaps_listed == 127
            && c.fixing_lower_bound == 127
            && c.coloring_breaks_swaps
            && fast_enough,
        detail: format!(
            "G_7 (D = 2) on {} vertices: base asymmetric {}, {} swap certificates, F >= {} certified (upper bound unverified), {time}",
            c.order, c.base_asymmetric, c.swaps_verified, c.fixing_lower_bound
        ),
        as_analysed: None,
    }
}

fn criterion_13() -> Outcome {
    let r = campaign(CheckId::RhoProps, 9);
    Outcome {
        id: 13,
        pass: r.is_clean() && r.n_max == 9,
        detail: format!(
            "rho-props over n <= 9: {} trees, {} violations",
            r.instances(),
            r.violations.len()
        ),
        as_analysed: None,
    }
}

fn main() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
        criterion_13(),
    ];
    for o in &outcomes {
        line(o);
    }
    for o in &outcomes {
        match o.as_analysed {
            None => assert!(o.pass, "criterion {} failed: {}", o.id, o.detail),
            Some(matches) => assert!(
                o.pass || matches,
                "criterion {} failed differently from the analysed counterexamples: {}",
                o.id,
                o.detail
            ),
        }
    }
}
