//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Frozen constants come from an independent oracle (Poisson brackets of the
//! commutative generators in S(n), computed outside this crate).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use kcascade::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn sys(t: TypeLabel, n: u32) -> RootSystem {
    RootSystem::new(t, n).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: &Report) -> Result<(), String> {
    check(r.ok(), || format!("{}: {} violations, first: {}", r.check, r.violations.len(), r.violations[0]))
}

/// Nonzero rational in [−10, 10].
fn rational(rng: &mut ChaCha8Rng) -> Scalar {
    let q: i64 = rng.gen_range(1..=5);
    loop {
        let p: i64 = rng.gen_range(-10 * q..=10 * q);
        if p != 0 {
            return Scalar::ratio(p, q);
        }
    }
}

fn random_on_cascade(s: &RootSystem, rng: &mut ChaCha8Rng) -> BTreeMap<Root, Scalar> {
    kostant_cascade(s).roots.into_iter().map(|b| (b, rational(rng))).collect()
}

fn c1_cascades() -> Outcome {
    let text = include_str!("golden/cascades.txt");
    let mut n = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (head, roots) = line.split_once(':').unwrap();
        let mut h = head.split_whitespace();
        let t: TypeLabel = h.next().unwrap().parse().unwrap();
        let r: u32 = h.next().unwrap().parse().unwrap();
        let mut want: Vec<Root> = roots.split_whitespace().map(|x| x.parse().unwrap()).collect();
        let s = sys(t, r);
        let c = kostant_cascade(&s);
        let mut got = c.roots.clone();
        want.sort();
        got.sort();
        check(got == want, || format!("{t}{r}: got {got:?}, want {want:?}"))?;
        check(is_strongly_orthogonal(&c.roots, &s), || format!("{t}{r} not strongly orthogonal"))?;
        n += 1;
    }
    Ok(format!("{n} systems"))
}

fn sweep_systems() -> Vec<RootSystem> {
    let mut v = Vec::new();
    for r in 1..=6 {
        v.push(sys(TypeLabel::A, r));
        v.push(sys(TypeLabel::C, r));
    }
    for r in 1..=5 {
        v.push(sys(TypeLabel::B, r));
    }
    for r in 2..=5 {
        v.push(sys(TypeLabel::D, r));
    }
    v
}

/// `(weight ok, central)` for every cascade root of the sweep systems.
fn generator_sweep() -> Vec<(String, bool, bool)> {
    use rayon::prelude::*;
    sweep_systems()
        .par_iter()
        .flat_map(|s| {
            let u = Uea::new(s);
            kostant_cascade(s)
                .roots
                .into_par_iter()
                .map(|b| {
                    let x = u.symmetrize(&canonical_generator(&b, s).unwrap());
                    let w = u.weight(&x).ok() == Some(expected_weight(&b, s).unwrap());
                    (format!("{}{} {b}", s.type_label(), s.rank()), w, u.is_central(&x))
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn c2_weights(sw: &[(String, bool, bool)]) -> Outcome {
    let bad: Vec<&String> = sw.iter().filter(|x| !x.1).map(|x| &x.0).collect();
    check(bad.is_empty(), || format!("weight mismatch: {bad:?}"))?;
    // special rows of the table
    let d5 = sys(TypeLabel::D, 5);
    check(expected_weight(&Root::diff(3, 4), &d5).unwrap() == Weight(vec![2, 2, 2, 0, 0]), || "D5 e3-e4".into())?;
    let d4 = sys(TypeLabel::D, 4);
    check(expected_weight(&Root::diff(3, 4), &d4).unwrap() == Weight(vec![1, 1, 1, -1]), || "D4 e3-e4".into())?;
    let b5 = sys(TypeLabel::B, 5);
    check(expected_weight(&Root::single(5), &b5).unwrap() == Weight(vec![1; 5]), || "B5 e5".into())?;
    Ok(format!("{} generators", sw.len()))
}

fn c3_centrality(sw: &[(String, bool, bool)]) -> Outcome {
    let bad: Vec<&String> = sw.iter().filter(|x| !x.2).map(|x| &x.0).collect();
    check(bad.is_empty(), || format!("not central: {bad:?}"))?;
    Ok(format!("{} generators", sw.len()))
}

fn c4_lemma1() -> Outcome {
    let mut pairs = 0;
    let mut literal = 0;
    for (t, n) in [(TypeLabel::D, 4), (TypeLabel::D, 5), (TypeLabel::B, 3), (TypeLabel::B, 4)] {
        let r = verify_comm_with_generators(&sys(t, n)).map_err(|e| e.to_string())?;
        clean(&r)?;
        pairs += r.instances;
        literal += r.details.get("literal_set_mismatches").and_then(|v| v.as_array()).map_or(0, Vec::len);
    }
    Ok(format!("{pairs} pairs, 0 violations ({literal} departures from the literal A(α) sets, listed in the reports)"))
}

fn c5_lemma2() -> Outcome {
    // frozen from the Poisson-bracket oracle: {P_α, P_γ} = a·P_{β_i}·P_{β_{i−2}}
    let golden: &[(TypeLabel, u32, &str, &str, i64)] = &[
        (TypeLabel::D, 4, "e1-e3", "e2+e3", -1),
        (TypeLabel::D, 4, "e1-e4", "e2+e4", -1),
        (TypeLabel::D, 4, "e2-e3", "e1+e3", 1),
        (TypeLabel::D, 4, "e2-e4", "e1+e4", 1),
        (TypeLabel::B, 3, "e1-e3", "e2+e3", -1),
        (TypeLabel::B, 3, "e2-e3", "e1+e3", 1),
        (TypeLabel::B, 3, "e1", "e2", -2),
    ];
    let mut count = 0;
    for (t, n) in [(TypeLabel::D, 4), (TypeLabel::B, 3)] {
        let s = sys(t, n);
        let r = lemma2_sweep(&s, None).map_err(|e| e.to_string())?;
        clean(&r)?;
        count += r.instances;
        let a = r.constants.get("a").cloned().unwrap_or_default();
        for (gt, gn, x, y, v) in golden.iter().filter(|g| g.0 == t && g.1 == n) {
            let (x, y): (Root, Root) = (x.parse().unwrap(), y.parse().unwrap());
            // a(γ,α) = −a(α,γ)
            let got = a.get(&format!("{x},{y}")).cloned().or_else(|| a.get(&format!("{y},{x}")).map(|v| -v));
            check(got == Some(Scalar::from(*v)), || format!("{gt}{gn} a({x},{y}) = {got:?}"))?;
        }
        clean(&factorization_sweep(&s).map_err(|e| e.to_string())?)?;
    }
    // D5: sampled pairs
    let d5 = sys(TypeLabel::D, 5);
    let casc = kostant_cascade(&d5);
    let out: Vec<Root> = d5.positive_roots().iter().filter(|r| !casc.contains(r)).copied().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sample = Vec::new();
    while sample.len() < 60 {
        let (x, y) = (out[rng.gen_range(0..out.len())], out[rng.gen_range(0..out.len())]);
        if x != y && !sample.contains(&(x, y)) {
            sample.push((x, y));
        }
    }
    let r = lemma2_sweep(&d5, Some(&sample)).map_err(|e| e.to_string())?;
    clean(&r)?;
    clean(&factorization_sweep(&d5).map_err(|e| e.to_string())?)?;
    Ok(format!("{count} exhaustive pairs (D4, B3), {} sampled (D5), factorizations clean", r.instances))
}

fn c6_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (t, n) in [(TypeLabel::A, 4), (TypeLabel::C, 4), (TypeLabel::B, 5), (TypeLabel::D, 6)] {
        let s = sys(t, n);
        for _ in 0..100 {
            let f = KostantForm::new(random_on_cascade(&s, &mut rng));
            let c = c_from_xi(&f, &s).map_err(|e| e.to_string())?;
            let back = xi_from_c(&c, &s).map_err(|e| e.to_string())?;
            check(back == f, || format!("{t}{n}: {:?} -> {:?}", f.xi, back.xi))?;
        }
    }
    // the (−1)^{k+1} sign
    let a4 = sys(TypeLabel::A, 4);
    let c = ScalarAssignment::new([(Root::diff(1, 5), Scalar::from(-1)), (Root::diff(2, 4), Scalar::from(7))].into());
    check(xi_from_c(&c, &a4).unwrap().get(&Root::diff(2, 4)) == Scalar::from(7), || "A4 sign".into())?;
    Ok("400 forms".into())
}

fn c7_weyl() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut certs = 0;
    for (t, n, want) in [(TypeLabel::D, 4, 4), (TypeLabel::B, 3, 3)] {
        let s = sys(t, n);
        let casc = kostant_cascade(&s);
        check((s.len() - casc.roots.len()) / 2 == want, || format!("{t}{n}: |Φ⁺∖B|/2"))?;
        for _ in 0..10 {
            let c = ScalarAssignment::new(random_on_cascade(&s, &mut rng));
            let w = weyl_presentation(&c, &s).map_err(|e| e.to_string())?;
            check(w.pairs.len() == want, || format!("{t}{n}: {} pairs", w.pairs.len()))?;
            clean(&w.report)?;
            certs += w.report.instances;
        }
    }
    Ok(format!("20 assignments, {certs} certified identities"))
}

fn c8_heisenberg() -> Outcome {
    for (t, n, dim) in [(TypeLabel::D, 4, 9), (TypeLabel::B, 3, 7)] {
        for c1 in [Scalar::one(), Scalar::from(2), Scalar::ratio(-3, 5)] {
            let h = heisenberg_reduction(&sys(t, n), &c1).map_err(|e| e.to_string())?;
            check(h.dim_k == dim, || format!("{t}{n}: dim k = {}", h.dim_k))?;
            clean(&h.report)?;
        }
    }
    Ok("D4, B3 at c1 ∈ {1, 2, −3/5}".into())
}

fn c9_infinite() -> Outcome {
    let mut steps = 0;
    for (t, ranks) in [(TypeLabel::D, [4, 5, 6]), (TypeLabel::B, [3, 4, 5])] {
        for w in ranks.windows(2) {
            let (a, b) = (sys(t, w[0]), sys(t, w[1]));
            for beta in [Root::sum(1, 2), Root::sum(3, 4)] {
                if !kostant_cascade(&a).contains(&beta) {
                    continue;
                }
                check(stability_check(&beta, &a, &b).map_err(|e| e.to_string())?, || format!("{t}{}→{} {beta}", w[0], w[1]))?;
                steps += 1;
            }
        }
    }
    let examples: [(TypeLabel, &str, &str); 3] = [
        (TypeLabel::D, "e1>e2>e3>e4>0>...", "[e1+e2, e3+e4]"),
        (TypeLabel::A, "e1>e3>e4>e2", "[e1-e2, e3-e4]"),
        (TypeLabel::C, "e1>e2>0>...", "[2e1, 2e2]"),
    ];
    for (t, o, want) in examples {
        let c = cascade_from_order(t, &OrderSpec::parse(o).unwrap()).map_err(|e| e.to_string())?;
        let got = format!("{:?}", c.roots);
        check(got == want, || format!("{t} {o}: {got}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut reversed = true;
    for (t, n) in [(TypeLabel::D, 4), (TypeLabel::D, 6), (TypeLabel::B, 5)] {
        let s = sys(t, n);
        for _ in 0..5 {
            let r = c_product_check(&KostantForm::new(random_on_cascade(&s, &mut rng)), &s).map_err(|e| e.to_string())?;
            clean(&r.report)?;
            check(r.col_ge_matches, || format!("{t}{n}: j ≤ k product"))?;
            reversed &= !r.col_le_matches;
        }
    }
    Ok(format!(
        "{steps} stability steps, 3 order examples; c-products match ∏_(j≤k){}",
        if reversed { "; printed col(β′) ≤ col(β) direction does not match" } else { "" }
    ))
}

fn c10_polarization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (t, n) in [(TypeLabel::B, 3), (TypeLabel::B, 4), (TypeLabel::D, 4), (TypeLabel::D, 5)] {
        let s = sys(t, n);
        for _ in 0..20 {
            let p = polarization(&s, &KostantForm::new(random_on_cascade(&s, &mut rng))).map_err(|e| e.to_string())?;
            check(p.ok(), || format!("{t}{n}: {:?}", p.report.violations))?;
        }
    }
    Ok("80 forms".into())
}

fn main() {
    let mut failed = 0;
    let mut run = |k: usize, name: &str, limit: u64, f: &mut dyn FnMut() -> Outcome| {
        let t0 = Instant::now();
        let res = f();
        let dt = t0.elapsed();
        let res = match res {
            Ok(m) if dt > Duration::from_secs(limit) => Err(format!("{m}; exceeded {limit} s")),
            r => r,
        };
        match res {
            Ok(m) => println!("criterion {k:>2} PASS  {name} [{:.2?}] {m}", dt),
            Err(m) => {
                failed += 1;
                println!("criterion {k:>2} FAIL  {name} [{:.2?}] {m}", dt)
            }
        }
    };
    run(1, "cascade tables", 1, &mut c1_cascades);
    let t0 = Instant::now();
    let sw = generator_sweep();
    let shared = t0.elapsed();
    run(2, "weight table", 60 - shared.as_secs(), &mut || c2_weights(&sw));
    run(3, "centrality", 120 - shared.as_secs(), &mut || c3_centrality(&sw));
    run(4, "commutation with root vectors", 300, &mut c4_lemma1);
    run(5, "minor commutators and Pfaffian factorization", 300, &mut c5_lemma2);
    run(6, "reconstruction round-trip", 60, &mut c6_roundtrip);
    run(7, "Weyl presentation", 120, &mut c7_weyl);
    run(8, "Heisenberg reduction", 60, &mut c8_heisenberg);
    run(9, "infinite-rank support", 30, &mut c9_infinite);
    run(10, "polarization", 60, &mut c10_polarization);
    println!("generator sweep shared by criteria 2 and 3: {shared:.2?}");
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
