//! Acceptance runner: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use equigenus::algebra::{
    integer, parse_poly, parse_series, LinearForm, MultiSeries, Poly, Ring,
};
use equigenus::fgl::{
    catalog, check_axioms, conjugate_coefficient, conjugate_orientation, elliptic_fgl_check,
    fgl_from_exponential, hurewicz, krichever_exponential, m_series, verify_bsfgl_shape,
    GenusKind, GenusSpec,
};
use equigenus::localize::{
    cf_series, check_conner_floyd, dataset, functional_equation_check, genus_value,
    localized_sum, p_omega, pairing_obstruction, phi, rigidity_check, search_pairings,
    special_vanishing_check, FunctionalEquation, Mode,
};
use equigenus::quasitoric::{
    signs_and_weights, simplex_pair, special_check, square_pair, FixedPointData,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cp_standard(n: usize) -> FixedPointData {
    signs_and_weights(&simplex_pair(n, &vec![-1; n]).unwrap()).unwrap()
}

fn poly(spec: &GenusSpec, text: &str) -> Poly {
    parse_poly(spec.ring(), text).unwrap()
}

/// The reference parametrization of the two-parameter genera: `(y, z) ↦ (-y, -z)`.
fn flipped(name: &str, order: u32) -> GenusSpec {
    let spec = catalog(name, order).unwrap();
    let r = spec.ring().clone();
    let images = vec![poly(&spec, "-y"), poly(&spec, "-z")];
    spec.specialize(&r, &images).unwrap()
}

fn criterion_1() -> Outcome {
    let order = 6;
    let hr = catalog("hurewicz", order + 1).map_err(err)?;
    let cp1 = dataset("cp1").map_err(err)?;
    let sum = localized_sum(&cp1, &hr, Mode::Universal, order).map_err(err)?;
    let terms = sum.terms();
    ensure(terms.len() == 2, "expected two localization terms")?;
    let (n0, d0) = &terms[0];
    let (n1, d1) = &terms[1];
    ensure(d0 == &vec![LinearForm::new(vec![1]).unwrap()], "first denominator is not u")?;
    ensure(d1 == &vec![LinearForm::new(vec![-1]).unwrap()], "second denominator is not -u")?;
    ensure(n0 == &MultiSeries::one(hr.ring(), 1, n0.order()), "1/u term has a non-unit numerator")?;
    // n1/(-u) = 1/[-1](u) with [-1](u) the inverse for F: F(u, [-1](u)) = 0.
    let spec = hr.at_order(order + 2).map_err(err)?;
    let bar = m_series(&spec, -1);
    let u = MultiSeries::variable(spec.ring(), 1, spec.order(), 0);
    let f = fgl_from_exponential(&spec);
    ensure(
        f.series().substitute(&[u.clone(), bar.clone()]).map_err(err)?.is_zero(),
        "[-1](u) is not the formal inverse",
    )?;
    let prod = n1.mul(&bar.truncate(n1.order())).map_err(err)?;
    let minus_u = u.neg().truncate(n1.order());
    ensure(prod == minus_u, "second term is not 1/[-1](u)")?;
    let cf = cf_series(&cp1, &hr, order).map_err(err)?;
    ensure(cf.cf(0).is_zero(), "cf_0 is nonzero")?;
    let m1 = spec.logarithm().coefficient(&[2]);
    let expected = m1.scale(&integer(2));
    ensure(expected == poly(&hr, "-2*b1"), "2 m_1 differs from -2 b1")?;
    let got = cf.genus_value().ok_or("cf_1 is not a polynomial")?;
    ensure(got == expected, format!("cf_1 = {got}"))?;
    Ok(format!("Φ(CP¹) = 1/u + 1/[-1](u); cf_0 = 0; cf_1 = {got} = 2m_1"))
}

fn criterion_2() -> Outcome {
    let todd = catalog("todd", 6).map_err(err)?;
    let z = poly(&todd, "z");
    let mut values = Vec::new();
    for n in 1..=4u32 {
        let v = genus_value(&cp_standard(n as usize), &todd).map_err(err)?;
        let expected = z.pow(n).scale(&integer(if n % 2 == 0 { 1 } else { -1 }));
        ensure(v == expected, format!("td(CP{n}) = {v}"))?;
        values.push(v.to_string());
    }
    Ok(format!("td(CPⁿ), n = 1..4: {}", values.join(", ")))
}

fn criterion_3() -> Outcome {
    let sg = catalog("signature", 6).map_err(err)?;
    for (n, e) in [(2, "z^2"), (4, "z^4")] {
        let v = genus_value(&cp_standard(n), &sg).map_err(err)?;
        ensure(v == poly(&sg, e), format!("sg(CP{n}) = {v}"))?;
    }
    let cn = catalog("cn", 6).map_err(err)?;
    let v = poly(&cn, "v");
    for n in 1..=3u32 {
        let got = genus_value(&cp_standard(n as usize), &cn).map_err(err)?;
        let expected = v.pow(n).scale(&integer(n as i64 + 1));
        ensure(got == expected, format!("cg(CP{n}) = {got}"))?;
    }
    Ok("sg(CP²) = z², sg(CP⁴) = z⁴, cg(CPⁿ) = (n+1)vⁿ for n = 1..3".into())
}

fn criterion_4() -> Outcome {
    let aug = catalog("augmentation", 6).map_err(err)?;
    for n in 1..=4 {
        let s = phi(&cp_standard(n), &aug, Mode::Linear, 6).map_err(err)?;
        ensure(s.is_zero(), format!("sum for CP{n} is {s:?}"))?;
        let cf = cf_series(&cp_standard(n), &aug, 6).map_err(err)?;
        ensure(cf.coeffs().iter().all(|c| c.is_zero()), format!("some cf_l nonzero for CP{n}"))?;
    }
    Ok("Σ_x ∏ 1/(w·u) ≡ 0 for CPⁿ, n = 1..4, through degree 6".into())
}

fn criterion_5() -> Outcome {
    let hr = catalog("hurewicz", 4).map_err(err)?;
    let cf = cf_series(&dataset("s6").map_err(err)?, &hr, 1).map_err(err)?;
    for l in 0..3 {
        ensure(cf.cf(l).is_zero(), format!("cf_{l} = {}", cf.cf(l)))?;
    }
    let got = cf.genus_value().ok_or("cf_3 is not a polynomial")?;
    let a = conjugate_orientation(&hr).map_err(err)?;
    let (a1, a2, a3) = (
        conjugate_coefficient(&a, 1),
        conjugate_coefficient(&a, 2),
        conjugate_coefficient(&a, 3),
    );
    let in_a = (&a1.pow(3) - &(&a1 * &a2).scale(&integer(3))) + a3.scale(&integer(3));
    let in_a = in_a.scale(&integer(2));
    let in_b = poly(&hr, "2*(-b1^3 + 3*b1*b2 - 3*b3)");
    ensure(in_a == in_b, format!("2(a1^3-3a1a2+3a3) = {in_a}"))?;
    ensure(got == in_b, format!("cf_3 = {got}"))?;
    Ok(format!("cf_0 = cf_1 = cf_2 = 0; cf_3 = {got}"))
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn criterion_6() -> Outcome {
    let hr = catalog("hurewicz", 4).map_err(err)?;
    let flag = dataset("flag3").map_err(err)?;
    let report = check_conner_floyd(&flag, &hr, 4).map_err(err)?;
    ensure(report.pass, format!("check-cf fails at {:?}", report.first_violation))?;
    let got = genus_value(&flag, &hr).map_err(err)?;
    let p: BTreeMap<Vec<u32>, Poly> = p_omega(3, &hr, 3).map_err(err)?;
    let delta = [2u32, 1, 0];
    let mut expected = Poly::zero(hr.ring());
    for rho in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let omega: Vec<u32> = rho.iter().map(|&i| delta[i]).collect();
        if let Some(c) = p.get(&omega) {
            expected = expected + c.scale(&integer(permutation_sign(&rho)));
        }
    }
    ensure(got == expected, format!("cf_3 = {got}, Σ sign(ρ) P_ρδ = {expected}"))?;
    Ok(format!("flag3 passes check-cf to order 4; hr = {got} = Σ sign(ρ) P_ρδ"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for n in 1..=3usize {
        for mask in 0..(1u32 << n) {
            let eps: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            let fpd = signs_and_weights(&simplex_pair(n, &eps).map_err(err)?).map_err(err)?;
            let s: Vec<i64> = fpd.points().iter().map(|p| p.sign as i64).collect();
            ensure(s[0] == 1, format!("ς(x0) = {} for ε = {eps:?}", s[0]))?;
            for i in 1..=n {
                ensure(eps[i - 1] == -s[i] / s[0], format!("ε = {eps:?}, signs {s:?}"))?;
            }
            // Weights at x_k for k ≥ 1.
            for k in 1..=n {
                let ek = eps[k - 1];
                let unit = |i: usize| {
                    let mut v = vec![0i64; n];
                    v[i - 1] = 1;
                    v
                };
                let mut expected = Vec::new();
                for j in 1..=n {
                    let w: Vec<i64> = if j < k {
                        let (a, b) = (unit(j), unit(k));
                        a.iter().zip(&b).map(|(x, y)| x - eps[j - 1] * ek * y).collect()
                    } else if j < n {
                        let (a, b) = (unit(j + 1), unit(k));
                        a.iter().zip(&b).map(|(x, y)| x - eps[j] * ek * y).collect()
                    } else {
                        unit(k).iter().map(|x| ek * x).collect()
                    };
                    expected.push(w);
                }
                let got: Vec<Vec<i64>> =
                    fpd.points()[k].weights.iter().map(|w| w.coefficients().to_vec()).collect();
                ensure(got == expected, format!("weights at x{k} for ε = {eps:?}: {got:?}"))?;
            }
            count += 1;
        }
    }
    let mut squares = 0;
    for e1 in [-1i64, 1] {
        for e2 in [-1i64, 1] {
            for d1 in -2i64..=2 {
                for d2 in -2i64..=2 {
                    let Ok(pair) = square_pair(e1, e2, d1, d2) else {
                        continue;
                    };
                    let fpd = signs_and_weights(&pair).map_err(err)?;
                    let s: Vec<i64> = fpd.points().iter().map(|p| p.sign as i64).collect();
                    let expected = vec![1, -e1, e1 * e2 - d1 * d2, -e2];
                    ensure(s == expected, format!("square {e1},{e2},{d1},{d2}: {s:?}"))?;
                    squares += 1;
                }
            }
        }
    }
    Ok(format!("{count} simplex sign patterns (signs and weights), {squares} square pairs"))
}

fn fgl_of(spec: &GenusSpec) -> MultiSeries {
    fgl_from_exponential(spec).series().clone()
}

fn criterion_8() -> Outcome {
    let order = 6;
    let mut names = Vec::new();
    for name in GenusKind::CATALOG {
        let spec = catalog(name, order).map_err(err)?;
        check_axioms(&fgl_from_exponential(&spec)).map_err(|p| format!("{name}: {p}"))?;
        names.push(name);
    }
    let kv = krichever_exponential(order).map_err(err)?;
    check_axioms(&fgl_from_exponential(&kv)).map_err(|p| format!("krichever: {p}"))?;

    let t2 = catalog("t2", order).map_err(err)?;
    let ratio = |num: &str, den: &str| -> MultiSeries {
        let n = parse_series(t2.ring(), 2, order, num).unwrap();
        let d = parse_series(t2.ring(), 2, order, den).unwrap();
        n.mul(&d.invert_unit().unwrap()).unwrap()
    };
    let published = ratio("u1 + u2 - (y+z)*u1*u2", "1 - y*z*u1*u2");
    ensure(
        fgl_of(&flipped("t2", order)) == published,
        "t2 law differs from (u1+u2-(y+z)u1u2)/(1-yz u1u2) in the (y,z) ↦ (-y,-z) parametrization",
    )?;
    let native = ratio("u1 + u2 + (y+z)*u1*u2", "1 - y*z*u1*u2");
    ensure(fgl_of(&t2) == native, "native t2 law differs")?;

    ensure(elliptic_fgl_check(order).map_err(err)?, "elliptic law is not Euler's")?;

    let todd = catalog("todd", order).map_err(err)?;
    let sg = catalog("signature", order).map_err(err)?;
    let cn = catalog("cn", order).map_err(err)?;
    let abel = catalog("abel", order).map_err(err)?;
    let zr = todd.ring().clone();
    let vr = cn.ring().clone();
    let in_z = |s: &str| parse_poly(&zr, s).unwrap();
    let in_v = |s: &str| parse_poly(&vr, s).unwrap();
    let spec_at = |g: &GenusSpec, r: &Ring, images: Vec<Poly>| {
        g.exponential().map_coefficients(r, &images).unwrap()
    };
    ensure(
        spec_at(&t2, &zr, vec![in_z("0"), in_z("z")]) == *todd.exponential(),
        "t2 at y = 0 is not todd",
    )?;
    ensure(
        spec_at(&abel, &zr, vec![in_z("0"), in_z("z")]) == *todd.exponential(),
        "abel at y = 0 is not todd",
    )?;
    ensure(
        spec_at(&t2, &zr, vec![in_z("-z"), in_z("z")]) == *sg.exponential(),
        "t2 at y = -z is not signature",
    )?;
    ensure(
        spec_at(&t2, &vr, vec![in_v("-v"), in_v("-v")]) == *cn.exponential(),
        "t2 at y = z = -v is not cn",
    )?;
    Ok(format!(
        "axioms to order {order} for {} and the Krichever exponential; t2 law (in the (y,z) ↦ (-y,-z) parametrization), Euler's law, y=0 → todd, y=-z → signature, y=z=-v → cn",
        names.join(", ")
    ))
}

fn criterion_9() -> Outcome {
    let order = 6;
    let mut failures = Vec::new();
    let mut notes = Vec::new();

    let abel = flipped("abel", order + 4);
    let s = verify_bsfgl_shape(&abel, order).map_err(err)?;
    ensure(s.a == poly(&abel, "y + z"), format!("abel a = {}", s.a))?;
    ensure(s.d.is_zero(), format!("abel d = {}", s.d))?;
    notes.push("abel: a = y + z, d = 0".to_string());

    let t2 = flipped("t2", order + 4);
    let s = verify_bsfgl_shape(&t2, order).map_err(err)?;
    let ser = |text: &str| parse_series(t2.ring(), 1, s.c.order(), text).unwrap();
    let ser_d = |text: &str| parse_series(t2.ring(), 1, s.d.order(), text).unwrap();
    ensure(s.a == poly(&t2, "y + z"), format!("t2 a = {}", s.a))?;
    if s.c != ser("1 - y*z*u1^2") {
        failures.push(format!("t2 c = {} (expected 1 - y*z*u1^2)", s.c));
    }
    let listed_d = "-y*z*(y+z)*u1 - y^2*z^2*u1^2";
    if s.d != ser_d(listed_d) {
        failures.push(format!("t2 d = {} (expected {listed_d})", s.d));
    }
    let native = catalog("t2", order + 4).map_err(err)?;
    let sn = verify_bsfgl_shape(&native, order).map_err(err)?;
    let native_d_matches = sn.d == parse_series(native.ring(), 1, sn.d.order(), listed_d).unwrap();
    notes.push(format!(
        "t2 native parametrization: a = {}, c = {}, d = {} (d {} the listed value)",
        sn.a,
        sn.c,
        sn.d,
        if native_d_matches { "matches" } else { "differs from" }
    ));

    let ell = catalog("elliptic", order + 4).map_err(err)?;
    let s = verify_bsfgl_shape(&ell, order).map_err(err)?;
    ensure(s.a == Poly::zero(ell.ring()), format!("elliptic a = {}", s.a))?;
    ensure(
        s.d == parse_series(ell.ring(), 1, s.d.order(), "-epsilon*u1^2").unwrap(),
        format!("elliptic d = {}", s.d),
    )?;
    let r = parse_series(ell.ring(), 1, s.c.order(), "1 - 2*delta*u1^2 + epsilon*u1^4").unwrap();
    ensure(s.c.mul(&s.c).map_err(err)? == r, "elliptic c² ≠ R")?;
    notes.push("elliptic: a = 0, d = -εu², c² = 1 - 2δu² + εu⁴".into());

    let kv = krichever_exponential(order + 4).map_err(err)?;
    let s = verify_bsfgl_shape(&kv, order).map_err(err)?;
    notes.push(format!("krichever: shape identity holds through order {order} (law computed to order {})", s.checked_order));

    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!(
            "{}; ({}). The listed t2 data (c = 1 - yz u²) are not the shape data of any t2 law: \
             c(u) = dF/du2(u,0) + a u is forced to 1 + yz u² by [u1²u2]F = yz",
            failures.join("; "),
            notes.join("; ")
        ))
    }
}

fn criterion_10() -> Outcome {
    let todd = catalog("todd", 6).map_err(err)?;
    let c = functional_equation_check(FunctionalEquation::Cp1, &todd, 6).map_err(err)?;
    ensure(c == poly(&todd, "-z"), format!("cp1/todd c = {c}"))?;
    let t2 = catalog("t2", 6).map_err(err)?;
    let c = functional_equation_check(FunctionalEquation::Cp2, &t2, 6).map_err(err)?;
    ensure(c == poly(&t2, "y*z"), format!("cp2/t2 c = {c}"))?;
    let cprime = functional_equation_check(FunctionalEquation::Cp1, &flipped("t2", 8), 6)
        .map_err(err)?;
    ensure(cprime == poly(&t2, "y + z"), format!("c' = {cprime}"))?;

    let kv = catalog("krichever", 8).map_err(err)?;
    let r = rigidity_check(&dataset("s6").map_err(err)?, &kv, 4).map_err(err)?;
    ensure(r.pass, format!("s6/krichever not rigid at cf_{:?}", r.first_violation))?;
    let cp2_mixed = signs_and_weights(&simplex_pair(2, &[1, -1]).map_err(err)?).map_err(err)?;
    let r = rigidity_check(&cp2_mixed, &t2, 4).map_err(err)?;
    ensure(r.pass, format!("cp2(1,-1)/t2 not rigid at cf_{:?}", r.first_violation))?;
    let hr = catalog("hurewicz", 6).map_err(err)?;
    let r = rigidity_check(&cp_standard(2), &hr, 4).map_err(err)?;
    ensure(!r.pass, "cp2/hurewicz unexpectedly rigid")?;
    Ok(format!(
        "cp1/todd c = -z; cp2/t2 c = yz, c' = y + z; s6/krichever and cp2(1,-1)/t2 rigid to order 4; cp2/hurewicz fails at cf_{}",
        r.first_violation.unwrap()
    ))
}

fn criterion_11() -> Outcome {
    let pair = square_pair(-1, 1, 2, 0).map_err(err)?;
    ensure(special_check(&pair.lambda), "square(-1,1,2,0) is not special")?;
    let r = special_vanishing_check(&pair, 4).map_err(err)?;
    ensure(r.krichever_value.is_zero(), format!("kv = {}", r.krichever_value))?;
    ensure(r.krichever_rigid, "krichever not rigid")?;
    let hr = r.hurewicz_value.clone().ok_or("hurewicz value missing")?;
    ensure(hr.is_zero(), format!("hr = {hr}"))?;
    ensure(r.pass, "special check failed")?;
    Ok("square(-1,1,2,0) special; kv = 0, hr = 0, kv rigid to order 4".into())
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    for e1 in [-1i64, 1] {
        for e2 in [-1i64, 1] {
            for d1 in -2i64..=2 {
                for d2 in -2i64..=2 {
                    let Ok(pair) = square_pair(e1, e2, d1, d2) else {
                        continue;
                    };
                    let fpd = signs_and_weights(&pair).map_err(err)?;
                    let any = search_pairings(&fpd).iter().any(|r| r.vanishes);
                    ensure(
                        any == (d1 * d2 == 0),
                        format!("square {e1},{e2},{d1},{d2}: vanishing pairing = {any}"),
                    )?;
                    let diag = pairing_obstruction(&fpd, &[vec![1, 3], vec![2, 4]]).map_err(err)?;
                    ensure(
                        !diag.blocks[0].vanishes,
                        format!("square {e1},{e2},{d1},{d2}: {{x1,x3}} vanishes"),
                    )?;
                    if d2 == 0 {
                        let r = pairing_obstruction(&fpd, &[vec![1, 4], vec![2, 3]]).map_err(err)?;
                        ensure(r.vanishes, "pairing {x1,x4},{x2,x3} fails with δ2 = 0")?;
                    }
                    if d1 == 0 {
                        let r = pairing_obstruction(&fpd, &[vec![1, 2], vec![3, 4]]).map_err(err)?;
                        ensure(r.vanishes, "pairing {x1,x2},{x3,x4} fails with δ1 = 0")?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} square pairs: vanishing pairing ⇔ δ1δ2 = 0; {{x1,x3}} never vanishes"))
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config::with_cases(common::CASES));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn coordinate_change(fpd: &FixedPointData, order: u32) -> Result<(), String> {
    let n = fpd.n() as u32;
    let hr = hurewicz(order + n, order + n + 1).map_err(err)?;
    let universal = phi(fpd, &hr, Mode::Universal, order).map_err(err)?;
    let linear = phi(fpd, &hr, Mode::Linear, order).map_err(err)?;
    let k = fpd.k();
    let b = hr.exponential().truncate(order);
    let images: Vec<MultiSeries> = (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            b.substitute_linear_form(&LinearForm::new(e).unwrap())
        })
        .collect();
    let substituted = universal.substitute(&images).map_err(err)?;
    ensure(substituted == linear, "Φ_universal(b(u)) ≠ Φ_linear(u)")?;
    ensure(
        universal.constant_term() == linear.constant_term(),
        "constant terms differ between modes",
    )
}

fn criterion_13() -> Outcome {
    use common::*;
    run_property("reversion", prop::collection::vec(small_rational(), 5), prop_reversion)?;
    run_property("invert_unit", (polynomial(3, 5), small_rational()), |(p, c)| {
        prop_invert_unit(p, c)
    })?;
    run_property(
        "divide_by_linear_form",
        (polynomial(3, 5), linear_form(2), small_rational()),
        |(p, l, c)| prop_divide_linear(p, l, c),
    )?;
    run_property("normalize split", designed(), prop_normalize_split)?;
    run_property("numeric oracle", (designed(), rational_point()), |(d, p)| {
        prop_numeric_oracle(d, p)
    })?;
    for (name, fpd) in [
        ("cp1", dataset("cp1").map_err(err)?),
        ("cp2", cp_standard(2)),
        ("s6", dataset("s6").map_err(err)?),
    ] {
        coordinate_change(&fpd, 5).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "5 property suites × {} cases; u ↦ b(u) consistency on cp1, cp2, s6 at order 5",
        common::CASES
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("localization of CP¹", criterion_1),
        ("Todd genus of CPⁿ", criterion_2),
        ("signature and c_n genera", criterion_3),
        ("augmentation identity", criterion_4),
        ("S⁶ relations and class", criterion_5),
        ("flag manifold", criterion_6),
        ("quasitoric signs", criterion_7),
        ("formal group law identities", criterion_8),
        ("shape recovery of (a, c, d)", criterion_9),
        ("rigidity", criterion_10),
        ("special vanishing", criterion_11),
        ("pairing obstruction", criterion_12),
        ("property suites", criterion_13),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.1}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.1}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
