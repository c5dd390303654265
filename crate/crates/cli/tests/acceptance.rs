//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ci_bundles::bundle::{check_parameters, cohomology_of_e, ext1_check, z_deficiency_below};
use ci_bundles::cayley_bacharach::{
    build_grid_scheme, cayley_bacharach_check, evaluation_ranks, random_points, residual_configuration,
    residual_identity_check,
};
use ci_bundles::fano::{
    bott_line_count, example42_lines, example46_check, fermat_lines, fermat_planes_p5, FermatHost,
};
use ci_bundles::hilbert::{cb_deficiency, h0_projective, ideal_sheaf_cohomology, CIType};
use ci_bundles::primes::resolve_field;
use ci_bundles::PrimeField;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn field(orders: &[u64]) -> Result<PrimeField, String> {
    resolve_field(None, orders).map_err(|e| e.to_string())
}

fn bott() -> Outcome {
    let start = Instant::now();
    let quintic = bott_line_count(4, 5, 0).map_err(|e| e.to_string())?.count.to_string();
    let t = within(start, Duration::from_secs(1))?;
    ensure(quintic == "2875", || format!("quintic threefold: {quintic} lines"))?;
    let conic = bott_line_count(2, 1, 0).map_err(|e| e.to_string())?.count.to_string();
    ensure(conic == "1", || format!("lines in P^2: {conic}"))?;
    let cubic = bott_line_count(3, 3, 0).map_err(|e| e.to_string())?.count.to_string();
    let direct = fermat_lines(&field(&[3])?, 3, &FermatHost::Surface).map_err(|e| e.to_string())?.len();
    ensure(cubic == "27" && direct == 27, || format!("cubic surface: localization {cubic}, enumeration {direct}"))?;
    Ok(format!("2875 in {t:.2?}; (2,1) = 1; (3,3) = 27 = enumeration"))
}

fn fermat_enumerations() -> Outcome {
    let start = Instant::now();
    for d in 3..=6u32 {
        let r = fermat_lines(&field(&[d as u64])?, d, &FermatHost::Surface).map_err(|e| e.to_string())?;
        ensure(r.len() == (3 * d * d) as usize, || format!("d = {d}: {} lines", r.len()))?;
        ensure(r.all_contained(), || format!("d = {d}: a line fails containment"))?;
    }
    for d in 3..=4u32 {
        let r = fermat_planes_p5(&field(&[d as u64])?, d).map_err(|e| e.to_string())?;
        ensure(r.len() == (15 * d * d * d) as usize, || format!("d = {d}: {} planes", r.len()))?;
        ensure(r.all_contained(), || format!("d = {d}: a plane fails containment"))?;
        let bad = r.items.iter().filter(|i| i.singular || i.h0_normal != 0).count();
        ensure(bad == 0, || format!("d = {d}: {bad} planes with sections of the normal bundle"))?;
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("lines d = 3..6, planes d = 3, 4 in {t:.2?}"))
}

fn normal_bundles() -> Outcome {
    let mut checked = 0;
    for d1 in [6u32, 7] {
        let deg = 3 - d1 as i64;
        let expected = vec![-(-deg).div_euclid(2), deg.div_euclid(2)];
        let f = field(&[d1 as u64])?;
        for seed in 0..6 {
            let run = example42_lines(&f, d1, seed).map_err(|e| e.to_string())?;
            ensure(run.report.len() == (3 * d1 * d1) as usize, || format!("d1 = {d1}, seed {seed}: {} lines", run.report.len()))?;
            for item in &run.report.items {
                let s = item.splitting.as_ref().ok_or_else(|| format!("d1 = {d1}, seed {seed}: no splitting"))?;
                ensure(s.degree() == deg, || format!("d1 = {d1}, seed {seed}: degree {} != {deg}", s.degree()))?;
                ensure(s.twists() == expected.as_slice(), || format!("d1 = {d1}, seed {seed}: splitting {s}"))?;
                ensure(item.h0_normal == 0, || format!("d1 = {d1}, seed {seed}: h0(N) = {}", item.h0_normal))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} lines over 6 seeds each for d1 = 6, 7"))
}

fn admissible(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(left: usize, lo: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for d in lo..=max {
            acc.push(d);
            rec(left - 1, d, max, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    rec(n - 2, 1, max, &mut Vec::new(), &mut all);
    all.into_iter().filter(|d| check_parameters(n, d).is_ok()).collect()
}

fn cohomology_chain() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in [4usize, 5] {
        for degrees in admissible(n, 8) {
            let p = check_parameters(n, &degrees).map_err(|e| e.to_string())?;
            let delta = i128::from(degrees[0] == 2);
            let tag = format!("n = {n}, degrees {degrees:?}");
            let c = cohomology_of_e(&p).map_err(|e| format!("{tag}: {e}"))?;
            ensure(c.h0 == 3 + delta, || format!("{tag}: h0 = {}", c.h0))?;
            ensure(c.h1 == 0, || format!("{tag}: h1 = {}", c.h1))?;
            ensure(c.h2_routes[0] == c.h2_routes[1], || format!("{tag}: h2 routes {:?}", c.h2_routes))?;
            let ext1 = ext1_check(&p).map_err(|e| e.to_string())?;
            ensure(ext1 == 1, || format!("{tag}: ext1 = {ext1}"))?;
            let below = z_deficiency_below(&p).map_err(|e| e.to_string())?;
            ensure(below == n as i128 - 1 - delta, || format!("{tag}: h1(I_Z(d-n-1)) = {below}"))?;
            count += 1;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{count} parameter sets in {t:.2?}"))
}

fn cayley_bacharach() -> Outcome {
    let start = Instant::now();
    let f = field(&[])?;
    let grid = build_grid_scheme(&f, 2, &[3, 3], 0).map_err(|e| e.to_string())?;
    ensure(cayley_bacharach_check(&grid, 3).holds, || "(3,3) grid fails at m = 3".into())?;
    for (d1, d2) in [(4u32, 6u32), (3, 5)] {
        let z = residual_configuration(&f, 4, &[d1, d2], 0).map_err(|e| e.to_string())?;
        let m = (d1 + d2) as i64 - 4;
        let out = cayley_bacharach_check(&z, m);
        ensure(out.holds, || format!("Z for ({d1},{d2}) fails at m = {m}, witness {:?}", out.witness))?;
    }
    let random = random_points(&f, 2, 9, 0).map_err(|e| e.to_string())?;
    let out = cayley_bacharach_check(&random, 3);
    ensure(!out.holds && out.witness.is_some(), || "9 random points satisfy the property".into())?;
    let mut splits = 0;
    for mask in 0u32..(1 << 9) {
        let first: Vec<usize> = (0..9).filter(|i| mask >> i & 1 == 1).collect();
        for m in 0..=3 {
            let r = residual_identity_check(&grid, &first, m, 6).map_err(|e| e.to_string())?;
            ensure(r.holds, || format!("split {first:?}, m = {m}: {} != {}", r.lhs, r.rhs))?;
            splits += 1;
        }
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("grid, both Z configurations, random witness, {splits} residual identities in {t:.2?}"))
}

fn grid_types(n: usize, max_points: u32) -> Vec<Vec<u32>> {
    fn rec(left: usize, lo: u32, prod: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        let mut d = lo;
        while prod * d.pow(left as u32) <= max {
            acc.push(d);
            rec(left - 1, d, prod * d, max, acc, out);
            acc.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    rec(n, 1, 1, max_points, &mut Vec::new(), &mut out);
    out
}

fn oracle_equivalence() -> Outcome {
    let f = field(&[])?;
    let (mut types, mut values) = (0, 0);
    for n in 1..=5usize {
        for degrees in grid_types(n, 60) {
            let ci = CIType::new(n, &degrees).map_err(|e| e.to_string())?;
            let z = build_grid_scheme(&f, n, &degrees, types as u64).map_err(|e| e.to_string())?;
            let top = ci.degree_sum() - n as i64;
            let ranks = evaluation_ranks(&z, top as u32);
            for m in 0..=top {
                let rank = ranks[m as usize] as i128;
                let h0 = h0_projective(n, m) - rank;
                let h1 = z.len() as i128 - rank;
                let h0_closed = ideal_sheaf_cohomology(&ci, m).map_err(|e| e.to_string())?.get(0);
                let h1_closed = cb_deficiency(&ci, m).map_err(|e| e.to_string())?;
                ensure(h0 == h0_closed && h1 == h1_closed, || {
                    format!("type {degrees:?} in P^{n}, m = {m}: ranks give ({h0}, {h1}), closed form ({h0_closed}, {h1_closed})")
                })?;
                values += 1;
            }
            types += 1;
        }
    }
    Ok(format!("{types} grid types in P^1..P^5, {values} twists"))
}

fn example46() -> Outcome {
    let r = example46_check(&field(&[])?, 6, 0).map_err(|e| e.to_string())?;
    ensure(r.families_verified == 6, || format!("{} cone families", r.families_verified))?;
    ensure(r.rank_m1 == 7 && r.rank_m2 == 7, || format!("ranks {} and {}", r.rank_m1, r.rank_m2))?;
    Ok("6 cone families, condition ranks 7 and 7".into())
}

fn run_all() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ci-bundles"))
        .args(["examples", "run-all"])
        .output()
        .map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(60))?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || format!("exit status {}: {text}", out.status))?;
    let rows: Vec<&str> = text.lines().filter(|l| l.ends_with("PASS") || l.ends_with("FAIL")).collect();
    ensure(!rows.is_empty() && rows.iter().all(|l| l.ends_with("PASS")), || format!("anchor table:\n{text}"))?;
    Ok(format!("{} anchors PASS, exit 0, {t:.2?}", rows.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("bott localization", bott),
        ("fermat enumerations", fermat_enumerations),
        ("normal bundles", normal_bundles),
        ("cohomology chain", cohomology_chain),
        ("cayley-bacharach", cayley_bacharach),
        ("oracle equivalence", oracle_equivalence),
        ("cone example", example46),
        ("run-all end to end", run_all),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
