//! Acceptance suite: runs every criterion, prints one line each and exits
//! non-zero when any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cartan_limits::limits::{
    classify_abelian_subalgebra, configuration_of_plane, duality, explicit_paths,
    is_unipotent_algebra, limit_reachable, oracle_classify, random_table_instance, TableInstance,
};
use cartan_limits::linalg::normalizer_dimension;
use cartan_limits::numeric::{
    detect_limit_plane_from, plane_plucker_f64, plucker_distance, RealMatrixSeq,
};
use cartan_limits::sl2::{
    classify_sl2, fixed_points_rp1, g_delta_family, link_displacement, shadow2,
};
use cartan_limits::triangle::{classify, normalize, triangle_from_matrix};
use cartan_limits::{
    parse_hreal, rat, HMatrix3, HReal, LimitClass, Matrix3, Rational, Sl2LimitClass,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(limit: Duration, elapsed: Duration) -> (bool, String) {
    (
        elapsed <= limit,
        format!("{:.2}s of {}s", elapsed.as_secs_f64(), limit.as_secs()),
    )
}

fn h(s: &str) -> HReal {
    s.parse().expect("valid element")
}

fn triangle_class(m: &HMatrix3) -> Option<LimitClass> {
    let t = triangle_from_matrix(m).ok()?;
    Some(classify(&normalize(&t).ok()?))
}

fn normalizer_dims() -> Outcome {
    let start = Instant::now();
    let dims: Vec<usize> = LimitClass::ALL
        .iter()
        .map(|c| normalizer_dimension(&c.canonical_algebra()))
        .collect();
    let (fast, time) = within(Duration::from_secs(1), start.elapsed());
    let expected = [2, 3, 4, 5, 5];
    outcome(
        dims == expected && fast,
        format!("computed {dims:?}, expected {expected:?}, {time}"),
    )
}

fn table_reproduction(instances: &[TableInstance]) -> (Outcome, Vec<Option<LimitClass>>) {
    let start = Instant::now();
    let classes: Vec<Option<LimitClass>> = instances
        .iter()
        .map(|i| triangle_class(&i.matrix))
        .collect();
    let (fast, time) = within(Duration::from_secs(30), start.elapsed());
    let hits = instances
        .iter()
        .zip(&classes)
        .filter(|(i, c)| **c == Some(i.row))
        .count();
    let o = outcome(
        hits == instances.len() && fast,
        format!("{hits}/{} rows reproduced, {time}", instances.len()),
    );
    (o, classes)
}

fn oracle_equivalence(instances: &[TableInstance], triangle: &[Option<LimitClass>]) -> Outcome {
    let start = Instant::now();
    let agree = instances
        .iter()
        .zip(triangle)
        .filter(|(i, t)| {
            let oracle = oracle_classify(&i.matrix).ok().map(|(c, _)| c);
            oracle.is_some() && oracle == **t
        })
        .count();
    let (fast, time) = within(Duration::from_secs(120), start.elapsed());
    outcome(
        agree == instances.len() && fast,
        format!("{agree}/{} agree, {time}", instances.len()),
    )
}

fn one_parameter_paths() -> Outcome {
    let start = Instant::now();
    let schedule = [100, 10_000, 1_000_000];
    let paths = explicit_paths();
    let mut worst = 0.0f64;
    let mut landed = 0;
    for path in &paths {
        let seq = RealMatrixSeq::Hyperreal(path.matrix.clone());
        let Ok(limit) = detect_limit_plane_from(&path.from.canonical_algebra(), &seq, &schedule)
        else {
            worst = f64::INFINITY;
            continue;
        };
        let d = plucker_distance(
            &limit.plucker,
            &plane_plucker_f64(&path.to.canonical_algebra()),
        );
        worst = worst.max(d);
        if d < 1e-6 {
            landed += 1;
        }
    }
    let (fast, time) = within(Duration::from_secs(5), start.elapsed());
    outcome(
        landed == paths.len() && fast,
        format!(
            "{landed}/{} paths within 1e-6 at n = 10^6, worst distance {worst:.1e}, {time}",
            paths.len()
        ),
    )
}

fn digraph_soundness() -> Outcome {
    use LimitClass::*;
    let start = Instant::now();
    // reachability as listed: each class reaches itself and everything
    // below it along C -> F -> N1 -> {N2, N3}
    let below = |a: LimitClass| -> &'static [LimitClass] {
        match a {
            C => &[C, F, N1, N2, N3],
            F => &[F, N1, N2, N3],
            N1 => &[N1, N2, N3],
            N2 => &[N2],
            N3 => &[N3],
        }
    };
    let mut mismatches = 0;
    let mut unexplained = 0;
    for a in LimitClass::ALL {
        for b in LimitClass::ALL {
            let expected = below(a).contains(&b);
            if limit_reachable(a, b) != expected {
                mismatches += 1;
            }
            if limit_reachable(duality(a), duality(b)) != limit_reachable(a, b) {
                mismatches += 1;
            }
            if expected {
                continue;
            }
            let (da, db) = (
                normalizer_dimension(&a.canonical_algebra()),
                normalizer_dimension(&b.canonical_algebra()),
            );
            let pencils = matches!((a, b), (N2, N3) | (N3, N2));
            let distinguished = configuration_of_plane(&a.canonical_algebra()).ok()
                != configuration_of_plane(&b.canonical_algebra()).ok()
                && classify_abelian_subalgebra(&a.canonical_algebra()).ok()
                    != classify_abelian_subalgebra(&b.canonical_algebra()).ok();
            if !(db < da || (pencils && da == db && distinguished)) {
                unexplained += 1;
            }
        }
    }
    let duality_swaps = LimitClass::ALL.map(duality) == [C, F, N1, N3, N2];
    let (fast, time) = within(Duration::from_secs(1), start.elapsed());
    outcome(
        mismatches == 0 && unexplained == 0 && duality_swaps && fast,
        format!(
            "25 pairs, {mismatches} reachability mismatches, {unexplained} unexplained non-edges, {time}"
        ),
    )
}

fn unipotency(rng: &mut ChaCha8Rng) -> Outcome {
    let rows = [LimitClass::N1, LimitClass::N2, LimitClass::N3];
    let mut ok = 0;
    let mut total = 0;
    while total < 100 {
        let inst = random_table_instance(*rows.choose(rng).expect("nonempty"), rng);
        if !inst.delta.is_infinitesimal() {
            continue;
        }
        total += 1;
        if let Ok((_, plane)) = oracle_classify(&inst.matrix) {
            let cubes_vanish = plane.basis().iter().all(|x| x.mul(x).mul(x).is_zero());
            if cubes_vanish && is_unipotent_algebra(&plane) {
                ok += 1;
            }
        }
    }
    outcome(ok == total, format!("{ok}/{total} shadow planes nilpotent"))
}

fn sl2_corollary() -> Outcome {
    let hyperbolic = classify_sl2(&h("1")) == Ok(Sl2LimitClass::Hyperbolic);
    let parabolic = classify_sl2(&h("t")) == Ok(Sl2LimitClass::Parabolic);
    let count = |delta: &str, c: Rational| {
        let fam = g_delta_family(&h(delta)).ok()?;
        fixed_points_rp1(&shadow2(&fam.finite_sample(&c).ok()?).ok()?)
    };
    let two = count("1", rat(1, 2)) == Some(2);
    let one = count("t", rat(3, 1)) == Some(1);
    outcome(
        hyperbolic && parabolic && two && one,
        format!(
            "delta = 1: {}, delta = t: {}, sampled fixed points {:?} and {:?}",
            classify_sl2(&h("1")).map_or("error".into(), |c| c.to_string()),
            classify_sl2(&h("t")).map_or("error".into(), |c| c.to_string()),
            count("1", rat(1, 2)),
            count("t", rat(3, 1)),
        ),
    )
}

fn link_law(rng: &mut ChaCha8Rng) -> Outcome {
    let mut ok = 0;
    let mut generic = 0;
    let mut total = 0;
    while total < 100 {
        let row = *LimitClass::ALL.choose(rng).expect("nonempty");
        let inst = random_table_instance(row, rng);
        let (delta, eps) = (&inst.delta, &inst.epsilon);
        if eps.is_zero() {
            continue;
        }
        let c = rat(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let a = HReal::one() + delta.clone() * HReal::from_rational(c);
        let Ok(d) = link_displacement(delta, eps, &a) else {
            continue;
        };
        total += 1;
        let bound = eps.valuation().expect("nonzero") + delta.valuation().expect("nonzero");
        let sum = delta.clone() + eps;
        let cancels = sum.is_zero()
            || sum.valuation().expect("nonzero") > delta.valuation().expect("nonzero");
        let holds = match d.valuation() {
            Ok(v) if cancels => v > bound,
            Ok(v) => {
                generic += 1;
                v == bound
            }
            Err(_) => sum.is_zero(),
        };
        if holds {
            ok += 1;
        }
    }
    outcome(
        ok == total,
        format!("{ok}/{total} samples obey the bound ({generic} generic with equality)"),
    )
}

fn appreciable(rng: &mut ChaCha8Rng) -> HReal {
    let c = rat(
        rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 },
        rng.gen_range(1..=5),
    );
    let tail = rat(rng.gen_range(-5..=5), rng.gen_range(1..=5));
    HReal::from_rational(c) + HReal::monomial(tail, rat(rng.gen_range(1..=4), 2))
}

fn relabeling_invariance(rng: &mut ChaCha8Rng) -> Outcome {
    const PERMUTATIONS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut ok = 0;
    let mut total = 0;
    for k in 0..100 {
        let row = LimitClass::ALL[k % 5];
        let inst = random_table_instance(row, rng);
        for perm in PERMUTATIONS {
            let scale: [HReal; 3] = std::array::from_fn(|_| appreciable(rng));
            let m: HMatrix3 =
                Matrix3::from_fn(|i, j| inst.matrix.0[i][perm[j]].clone() * &scale[j]);
            total += 1;
            let oracle = oracle_classify(&m).ok().map(|(c, _)| c);
            if triangle_class(&m) == Some(row) && oracle == Some(row) {
                ok += 1;
            }
        }
    }
    outcome(
        ok == total,
        format!("{ok}/{total} relabeled instances unchanged"),
    )
}

fn random_element(rng: &mut ChaCha8Rng) -> HReal {
    let mut poly = || {
        (0..rng.gen_range(0..4)).fold(HReal::zero(), |acc, _| {
            let c = rat(
                rng.gen_range(1..=12) * if rng.gen_bool(0.5) { 1 } else { -1 },
                rng.gen_range(1..=7),
            );
            let r = *[1, 2, 3].choose(rng).expect("nonempty");
            acc + HReal::monomial(c, rat(rng.gen_range(-6..=8), r))
        })
    };
    let num = poly();
    let den = poly();
    if den.is_zero() || rng.gen_bool(0.5) {
        num
    } else {
        num / den
    }
}

fn parser_round_trip(rng: &mut ChaCha8Rng) -> Outcome {
    let mut ok = 0;
    for _ in 0..500 {
        let x = random_element(rng);
        let printed = x.to_string();
        if let Ok(back) = parse_hreal(&printed) {
            if back == x && back.to_string() == printed {
                ok += 1;
            }
        }
    }
    outcome(
        ok == 500,
        format!("{ok}/500 identical after print, parse, print"),
    )
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let instances: Vec<TableInstance> = LimitClass::ALL
        .iter()
        .flat_map(|&row| {
            (0..200)
                .map(|_| random_table_instance(row, &mut rng))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut results = vec![("normalizer dimensions", normalizer_dims())];
    let (table, triangle) = table_reproduction(&instances);
    results.push(("table reproduction", table));
    results.push((
        "oracle equivalence",
        oracle_equivalence(&instances, &triangle),
    ));
    results.push(("one-parameter paths", one_parameter_paths()));
    results.push(("digraph soundness", digraph_soundness()));
    results.push(("unipotency", unipotency(&mut rng)));
    results.push(("sl2 limits", sl2_corollary()));
    results.push(("link-order law", link_law(&mut rng)));
    results.push(("relabeling invariance", relabeling_invariance(&mut rng)));
    results.push(("parser round trip", parser_round_trip(&mut rng)));

    let mut failed = 0;
    for (k, (name, o)) in results.iter().enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name}: {}", k + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
