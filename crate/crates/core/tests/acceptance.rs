//! The twelve acceptance criteria, run in order with their runtime bounds.
//! Each prints one `PASS`/`FAIL` line; the test fails if any criterion does.
//!
//! `cargo test -p octolab --test acceptance -- --nocapture` shows the lines.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use octolab::algebra::{zero_divisor_witness, Octonion, BASIS_PRODUCT, TRIPLES};
use octolab::calibrations::{
    coassociative_complement, combinations, extension_failure, is_associative_plane, phi, psi, quaternion_hull,
};
use octolab::dims::{group_dim, shilov_check, symmetric_space_check, RowStatus};
use octolab::heisenberg::{basis_valued_elements, h_bracket, h_dagger, nilpotency_check};
use octolab::liegen::triality::coefficient_matrix;
use octolab::liegen::{
    derivation_algebra, left_mult_closure, stabilizer_subalgebra, theta_all, triality_decompose_all, RatMatrix,
};
use octolab::roots::{d4_roots, dynkin_identify, positive_roots, root_axiom_check, RootSet};
use octolab::verify::{run_verification, Format, Status, EXPECTED_NON_PASS};
use octolab::xproduct::{jacobi_defect, path_discrepancy, torsion_tensor, unit_point_catalog, PathPair, UnitPoint};
use octolab::Rational;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

fn spin8_generation() -> Outcome {
    let b = left_mult_closure().map_err(|x| x.to_string())?;
    ensure!(b.dim() == 28, "closure dimension {}", b.dim());
    ensure!(b.members().iter().all(RatMatrix::is_antisymmetric), "non-antisymmetric member");
    Ok(format!("dim {}", b.dim()))
}

fn fibration_chain() -> Outcome {
    let spin8 = left_mult_closure().map_err(|x| x.to_string())?;
    let g2 = derivation_algebra().map_err(|x| x.to_string())?;
    let spin7 = stabilizer_subalgebra(&spin8, &Octonion::ONE).map_err(|x| x.to_string())?;
    let dims = [g2.dim(), spin7.dim(), spin8.dim()];
    ensure!(dims == [14, 21, 28], "dimensions {dims:?}");
    ensure!(spin7.contains_span(&g2), "G2 not inside stab(1)");
    ensure!(spin8.contains_span(&spin7), "stab(1) not inside the closure");
    Ok(format!("{} < {} < {}, steps 7 and 7", dims[0], dims[1], dims[2]))
}

fn torsion() -> Outcome {
    let t1 = torsion_tensor(&UnitPoint::one()).map_err(|x| x.to_string())?;
    for i in 1..8 {
        for j in 1..8 {
            for k in 1..8 {
                let (sign, kk) = BASIS_PRODUCT[i][j];
                let want = if i != j && kk == k { Rational::int(sign.into()) } else { Rational::ZERO };
                ensure!(t1.get(i, j, k) == want, "T({i},{j},{k})(1) = {}", t1.get(i, j, k));
            }
        }
    }
    let te1 = torsion_tensor(&UnitPoint::basis(1)).map_err(|x| x.to_string())?;
    let ((i, j, k), a, b) = t1.first_difference(&te1).ok_or("T(e1) equals T(1)")?;
    let catalog = unit_point_catalog();
    ensure!(catalog.len() >= 10, "catalog has {} points", catalog.len());
    for p in &catalog {
        let t = torsion_tensor(p).map_err(|x| x.to_string())?;
        ensure!(t.antisymmetry_violation().is_none(), "antisymmetry fails at {}", p.value());
    }
    Ok(format!("T({i},{j},{k}): {a} at 1, {b} at e1; antisymmetric at {} points", catalog.len()))
}

fn non_lie() -> Outcome {
    let one = UnitPoint::one();
    let mut nonzero = 0;
    for t in combinations(3) {
        let d = jacobi_defect(t[0], t[1], t[2], &one).map_err(|x| x.to_string())?;
        let in_hull = t.iter().all(|i| [1, 2, 4].contains(i));
        ensure!(!in_hull || d.is_zero(), "defect {d} inside the hull at {t:?}");
        nonzero += usize::from(!d.is_zero());
    }
    ensure!(nonzero > 0, "every Jacobi defect vanishes");
    Ok(format!("{nonzero} of 35 triples have nonzero defect"))
}

fn triality() -> Outcome {
    let basis = left_mult_closure().map_err(|x| x.to_string())?;
    let m = basis.members();
    ensure!(coefficient_matrix().rank() == 56, "coefficient rank {}", coefficient_matrix().rank());
    let triples = triality_decompose_all(m).map_err(|x| x.to_string())?;
    ensure!(triples.len() == 28, "{} solutions", triples.len());
    for t in &triples {
        ensure!(t.relation_violation().is_none(), "relation fails");
    }
    let theta: Vec<RatMatrix> = triples.iter().map(|t| t.a_prime.clone()).collect();
    let mut brackets = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            brackets.push(m[i].bracket(&m[j]));
        }
    }
    let theta_of_brackets = theta_all(&brackets).map_err(|x| x.to_string())?;
    let mut n = 0;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            ensure!(theta_of_brackets[n] == theta[i].bracket(&theta[j]), "theta fails on pair ({i},{j})");
            n += 1;
        }
    }
    let g2 = derivation_algebra().map_err(|x| x.to_string())?;
    for t in triality_decompose_all(g2.members()).map_err(|x| x.to_string())? {
        ensure!(t.a_prime == t.a && t.a_dblprime == t.a, "derivation moved by triality");
    }
    Ok(format!("28 unique solutions, {n} bracket pairs preserved, 14 derivations fixed"))
}

fn calibration() -> Outcome {
    let mut unit = BTreeSet::new();
    for t in combinations(3) {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        let p = phi(&x, &y, &z).map_err(|x| x.to_string())?.abs();
        let by_assoc = Octonion::associator(&x, &y, &z).is_zero();
        let pred = is_associative_plane(&x, &y, &z).map_err(|x| x.to_string())?;
        ensure!(pred == by_assoc && (p == Rational::ONE) == by_assoc, "disagreement at {t:?}");
        if p == Rational::ONE {
            unit.insert(t);
        }
    }
    let expected: BTreeSet<Vec<usize>> = TRIPLES
        .iter()
        .map(|t| {
            let mut s = t.to_vec();
            s.sort();
            s
        })
        .collect();
    ensure!(unit == expected, "|phi| = 1 on {unit:?}");
    for t in combinations(2) {
        let h = quaternion_hull(&e(t[0]), &e(t[1])).map_err(|x| x.to_string())?;
        let c = coassociative_complement(&h).map_err(|x| x.to_string())?;
        let v = psi(&c[0], &c[1], &c[2], &c[3]).map_err(|x| x.to_string())?;
        ensure!(v.abs() == Rational::ONE, "psi = {v} on complement of {t:?}");
    }
    Ok("|phi| = 1 on the 7 table triples; |psi| = 1 on all 21 complements".into())
}

fn dimensional_reduction() -> Outcome {
    let mut extensions = 0;
    for t in combinations(2) {
        let h = quaternion_hull(&e(t[0]), &e(t[1])).map_err(|x| x.to_string())?;
        ensure!(h.dim == 4 && h.is_closed(), "hull {t:?} not closed");
        ensure!(h.associator_violation().is_none(), "hull {t:?} not associative");
        for x in &h.basis {
            for y in &h.basis {
                for z in &h.basis {
                    let d = path_discrepancy(&PathPair { start: *x, seg_a: *y, seg_b: *z });
                    ensure!(d.is_zero(), "path discrepancy in hull {t:?}");
                }
            }
        }
        for k in 1..8 {
            if !h.contains(&e(k)) {
                extensions += 1;
                ensure!(extension_failure(&h, &e(k)).is_some(), "hull {t:?} + e{k} is associative");
            }
        }
    }
    Ok(format!("21 hulls clean, {extensions} extensions all fail"))
}

fn roots() -> Outcome {
    let d4 = d4_roots();
    ensure!(d4.len() == 24, "{} roots", d4.len());
    ensure!(root_axiom_check(&d4).map_err(|x| x.to_string())?.passes(), "axioms fail");
    let c = dynkin_identify(&d4).map_err(|x| x.to_string())?;
    ensure!(c.dynkin_type.to_string() == "D4", "identified as {}", c.dynkin_type);
    let pos = positive_roots();
    let cover = RootSet::new(pos.iter().flat_map(|r| [*r, r.neg()])).map_err(|x| x.to_string())?;
    ensure!(pos.len() == 12 && cover == d4, "positive roots do not reconstruct D4");
    let coset = group_dim("Spin(8)").map_err(|x| x.to_string())? - group_dim("U(4)").map_err(|x| x.to_string())?;
    ensure!(coset == 12, "coset dimension {coset}");
    Ok("24 roots, D4, 12 positive, 28 - 16 = 12".into())
}

fn dimensions() -> Outcome {
    let shilov = shilov_check();
    ensure!(shilov.iter().all(|s| s.matches), "shilov mismatch");
    let pairs: Vec<(u64, u64)> = shilov.iter().map(|s| (s.compared_dim, s.boundary_dim)).collect();
    ensure!(pairs == [(16, 16), (8, 8), (12, 12)], "shilov dims {pairs:?}");
    let rows: Vec<RowStatus> = symmetric_space_check().iter().map(|r| r.status).collect();
    ensure!(
        rows == [RowStatus::Consistent, RowStatus::Consistent, RowStatus::Discrepancy, RowStatus::Discrepancy],
        "row statuses {rows:?}"
    );
    Ok("shilov 16/8/12; rows 3 and 4 flagged".into())
}

fn zero_divisors() -> Outcome {
    let (u, v) = zero_divisor_witness();
    ensure!(!u.is_zero() && !v.is_zero() && u.multiply(&v).is_zero(), "witness product nonzero");
    ensure!(u.quadratic_norm().is_zero() && v.quadratic_norm().is_zero(), "witness not null");
    let mut units = Vec::new();
    for i in 0..8 {
        for s in [1, -1] {
            units.push(e(i).scale(Rational::int(s)));
        }
        for j in i + 1..8 {
            for (s, t) in [(1, 1), (1, -1)] {
                units.push(e(i).scale(Rational::int(s)) + e(j).scale(Rational::int(t)));
            }
        }
    }
    for x in &units {
        for y in &units {
            ensure!(!x.multiply(y).is_zero(), "real zero divisor {x} * {y}");
        }
    }
    Ok(format!("(1+i e1)(1-i e1) = 0; none among {} real pairs", units.len() * units.len()))
}

fn heisenberg() -> Outcome {
    let r = nilpotency_check().map_err(|x| x.to_string())?;
    ensure!(r.nilpotent_index_3, "nonzero triple {:?}", r.first_nonzero_triple);
    let elems = basis_valued_elements(false);
    for a in &elems {
        ensure!(h_dagger(&h_dagger(a)) == *a, "dagger not an involution");
        for b in elems.iter().step_by(8) {
            ensure!(h_bracket(a, b).map_err(|x| x.to_string())?.is_central_only(), "bracket leaves the corner");
        }
    }
    Ok(format!("{} pair products, triples vanish both ways", r.pairs))
}

fn end_to_end() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_octolab"))
        .args(["verify", "all", "--format", "json"])
        .output()
        .map_err(|x| x.to_string())?;
    ensure!(out.status.code() == Some(0), "exit code {:?}", out.status.code());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|x| x.to_string())?;
    ensure!(v["summary"]["fail"] == 0, "failures: {}", v["summary"]["fail"]);
    let report = run_verification("all", Format::Json).map_err(|x| x.to_string())?;
    let non_pass: BTreeSet<(String, Status)> =
        report.checks.iter().filter(|c| c.status != Status::Pass).map(|c| (c.id.clone(), c.status)).collect();
    let expected: BTreeSet<(String, Status)> = EXPECTED_NON_PASS.iter().map(|(id, s)| (id.to_string(), *s)).collect();
    ensure!(non_pass == expected, "non-pass entries {non_pass:?}");
    Ok(format!(
        "{} checks, non-pass exactly {:?}",
        report.checks.len(),
        expected.iter().map(|x| x.0.as_str()).collect::<Vec<_>>()
    ))
}

type Criterion = (&'static str, u64, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("1 spin8 generation", 5, spin8_generation),
        ("2 fibration chain", 5, fibration_chain),
        ("3 torsion", 2, torsion),
        ("4 non-Lie certificate", 1, non_lie),
        ("5 triality", 30, triality),
        ("6 calibration", 1, calibration),
        ("7 dimensional reduction", 2, dimensional_reduction),
        ("8 roots", 1, roots),
        ("9 dimension bookkeeping", 1, dimensions),
        ("10 zero divisors", 1, zero_divisors),
        ("11 heisenberg", 5, heisenberg),
        ("12 end-to-end", 60, end_to_end),
    ];
    let mut failed = Vec::new();
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(limit) => Err(format!("{detail}; over the {limit} s bound")),
            other => other,
        };
        match &result {
            Ok(detail) => println!("PASS {name} ({:.3} s): {detail}", elapsed.as_secs_f64()),
            Err(why) => {
                println!("FAIL {name} ({:.3} s): {why}", elapsed.as_secs_f64());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
