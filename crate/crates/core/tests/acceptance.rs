//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact rational equality.

use std::process::ExitCode;

use liecps::catalog::{self, default_samples, get, get_structure, instances, two_dim_type, EntryKind, Params, TwoDimType, KEYS};
use liecps::connection::{
    cp_connection, curvature, curvature_at, extend_to_hat, is_flat, is_torsion_free, parallel_check, uniqueness_probe,
};
use liecps::forms::{
    all_passed, ce_differential, check_dual_product_integrability, hypersymplectic_suite, KForm,
};
use liecps::hypercomplex::{induce_hypercomplex, induced_cps_on_hat};
use liecps::lie::{check_jacobi, is_abelian_subspace, is_ideal, parse_combination, realify_complexification};
use liecps::linalg::{CirclePoint, Matrix, Subspace, Vector};
use liecps::lsa::{
    aff_bracket, associator, bicrossproduct, check_lsa, check_matched_pair, extended_product, induced_lsa,
    matched_pair_from_cps, phi_psi_obstruction,
};
use liecps::random::{self, random_almost_product, random_bilinear_product, random_cps, random_lsa, random_sparse_product};
use liecps::structures::{check_product_integrable, is_abelian_cs, standard_abelian, validate_cps, AlmostProduct, ComplexProductStructure};
use liecps::LieAlgebra;

struct Outcome {
    notes: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Self { notes: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.notes.push(what.into());
        }
    }

    fn passed(&self) -> bool {
        self.notes.is_empty()
    }
}

fn v(labels: &[String], s: &str) -> Vector {
    parse_combination(labels, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn endo(labels: &[String], images: &[&str]) -> Matrix {
    let cols: Vec<Vector> = images.iter().map(|s| v(labels, s)).collect();
    Matrix::from_columns(labels.len(), &cols).unwrap()
}

fn span(labels: &[String], vs: &[&str]) -> Subspace {
    Subspace::span(labels.len(), &vs.iter().map(|s| v(labels, s)).collect::<Vec<_>>())
}

/// Columns where `got` and `want` differ, as `label: got vs want`.
fn column_diffs(g: &LieAlgebra, got: &Matrix, want: &Matrix) -> Vec<String> {
    (0..g.dim())
        .filter(|&k| got.column(k) != want.column(k))
        .map(|k| format!("{} -> {} (printed {})", g.labels()[k], g.show(&got.column(k)), g.show(&want.column(k))))
        .collect()
}

fn gl2r() -> Outcome {
    let mut o = Outcome::new();
    let cps = match get_structure("gl2R", "JE", &Params::none()) {
        Ok(c) => c,
        Err(e) => {
            o.check(false, format!("validate_cps: {e}"));
            return o;
        }
    };
    let g = cps.algebra();
    let l = g.labels().to_vec();
    o.check(cps.plus() == &span(&l, &["Y", "W+Z"]), "plus eigenspace");
    o.check(cps.minus() == &span(&l, &["X", "W-Z"]), "minus eigenspace");
    match cp_connection(&cps) {
        Ok(c) => o.check(curvature(&c).nonzero_count() == 0, "connection has curvature"),
        Err(e) => o.check(false, e.to_string()),
    }
    match induce_hypercomplex(&cps) {
        Ok((rc, h)) => {
            let hl = rc.hat.labels().to_vec();
            // Action lines exactly as printed.
            let i_printed = endo(&hl, &["Z^", "-X^", "Y^", "W^", "-Z", "-X", "Y", "-W"]);
            let j_printed = endo(
                &hl,
                &["-X-Y", "1/2W+1/2Z", "1/2W-1/2Z", "-X+Y", "-X^-Y^", "1/2W^+1/2Z^", "1/2W^-1/2Z^", "-X^+Y^"],
            );
            let mut diffs = column_diffs(&rc.hat, h.j1(), &i_printed);
            diffs.extend(column_diffs(&rc.hat, h.j2(), &j_printed));
            if !diffs.is_empty() {
                let squares = (-&(&i_printed * &i_printed)).is_identity();
                o.check(
                    false,
                    format!(
                        "{} of 16 printed action lines differ: {}; printed I^ squares to -Id: {squares}",
                        diffs.len(),
                        diffs.join("; ")
                    ),
                );
            }
        }
        Err(e) => o.check(false, e.to_string()),
    }
    o
}

fn a2() -> Outcome {
    let mut o = Outcome::new();
    let cps = get_structure("A2", "JE", &Params::none()).expect("A2 validates");
    let g = cps.algebra();
    let l = g.labels().to_vec();
    let p = extended_product(&cps).expect("extended product");
    let table = [
        ("A-D", "A-D", "A-D"),
        ("B+C", "A-D", "2C"),
        ("A-D", "C", "-C"),
        ("B+C", "C", "0"),
        ("A-D", "B+C", "B+C"),
        ("B+C", "B+C", "2D"),
        ("A-D", "D", "-D"),
        ("B+C", "D", "0"),
    ];
    for (x, y, want) in table {
        let got = p.mul(&v(&l, x), &v(&l, y));
        o.check(got == v(&l, want), format!("L_({x})({y}) = {}", g.show(&got)));
    }
    for x in ["C", "D"] {
        for k in 0..4 {
            let got = p.mul(&v(&l, x), &liecps::linalg::unit_vector(4, k));
            o.check(got.iter().all(num::Zero::is_zero), format!("L_{x} not zero on {}", l[k]));
        }
    }
    let (x, y) = (v(&l, "A-D"), v(&l, "B+C"));
    o.check(associator(&p, &x, &y, &x) == v(&l, "-4C"), "x(yz)-(xy)z");
    o.check(associator(&p, &y, &x, &x) == v(&l, "2C"), "y(xz)-(yx)z");
    o.check(!phi_psi_obstruction(&cps).expect("obstruction").extends(), "product extends");
    let c = cp_connection(&cps).expect("connection");
    o.check(!is_flat(&c), "connection flat");
    o.check(curvature_at(&c, &x, &y, &x) == v(&l, "-6C"), "R(A-D,B+C)(A-D)");
    for (key, cps) in [("A2", cps.clone()), ("gl2R", get_structure("gl2R", "JE", &Params::none()).unwrap())] {
        let c = cp_connection(&cps).unwrap();
        let hat = extend_to_hat(&c, &realify_complexification(cps.algebra())).unwrap();
        o.check(is_flat(&c) == is_flat(&hat), format!("{key}: flatness differs between g and its complexification"));
    }
    o
}

fn h3r(samples: &[CirclePoint]) -> Outcome {
    let mut o = Outcome::new();
    for half in samples {
        let tag = { let f = half.double(); format!("(cos, sin) = ({}, {})", f.cos(), f.sin()) };
        let params = Params::at(half.clone());
        let cps = match get_structure("h3R", "E_theta", &params) {
            Ok(c) => c,
            Err(e) => {
                o.check(false, format!("{tag}: {e}"));
                continue;
            }
        };
        let g = cps.algebra();
        o.check(is_abelian_subspace(g, cps.plus()) && is_abelian_subspace(g, cps.minus()), format!("{tag}: eigenspaces abelian"));
        let mp = matched_pair_from_cps(&cps).expect("matched pair");
        let b = bicrossproduct(&mp).expect("bicrossproduct");
        o.check(b.same_constants(&cps.adapted_algebra()), format!("{tag}: bicrossproduct constants"));
        let (rc, h) = induce_hypercomplex(&cps).expect("hypercomplex");
        let hl = rc.hat.labels().to_vec();
        let full = half.double();
        let (c, s) = (full.cos().clone(), full.sin().clone());
        // I_theta as printed, with c = cos(theta), s = sin(theta).
        let col = |terms: &[(num::BigRational, &str)]| {
            let mut out = vec![num::BigRational::from_integer(0.into()); 8];
            for (k, lab) in terms {
                out[hl.iter().position(|x| x == lab).unwrap()] += k;
            }
            out
        };
        let one = num::BigRational::from_integer(1.into());
        let cols = vec![
            col(&[(one.clone(), "X^")]),
            col(&[(-one.clone(), "Y^")]),
            col(&[(c.clone(), "Z^"), (s.clone(), "W^")]),
            col(&[(s.clone(), "Z^"), (-c.clone(), "W^")]),
            col(&[(-one.clone(), "X")]),
            col(&[(one.clone(), "Y")]),
            col(&[(-c.clone(), "Z"), (-s.clone(), "W")]),
            col(&[(-s.clone(), "Z"), (c.clone(), "W")]),
        ];
        let i_printed = Matrix::from_columns(8, &cols).unwrap();
        let j_printed = endo(&hl, &["Y", "-X", "W", "-Z", "Y^", "-X^", "W^", "-Z^"]);
        o.check(h.j1() == &i_printed, format!("{tag}: I_theta"));
        o.check(h.j2() == &j_printed, format!("{tag}: J^"));
    }
    o
}

fn a4(samples: &[CirclePoint]) -> Outcome {
    let mut o = Outcome::new();
    let claims = [
        ("E_theta", TwoDimType::Aff, TwoDimType::Aff),
        ("E'_theta", TwoDimType::Aff, TwoDimType::Aff),
        ("E''_theta", TwoDimType::Aff, TwoDimType::Aff),
        ("E~", TwoDimType::Abelian, TwoDimType::Aff),
    ];
    let mut type_mismatches = Vec::new();
    for half in samples {
        let tag = { let f = half.double(); format!("(cos, sin) = ({}, {})", f.cos(), f.sin()) };
        let params = Params::at(half.clone());
        let theta_pi = half.double().is_half_turn();
        for (name, plus, minus) in claims {
            if theta_pi && (name == "E'_theta" || name == "E''_theta") {
                continue;
            }
            let cps = match get_structure("A4", name, &params) {
                Ok(c) => c,
                Err(e) => {
                    o.check(false, format!("{name} at {tag}: {e}"));
                    continue;
                }
            };
            let g = cps.algebra();
            let got = (two_dim_type(g, cps.plus()), two_dim_type(g, cps.minus()));
            if got != (Some(plus), Some(minus)) {
                type_mismatches.push(format!("{name} at {tag}: {:?}/{:?}", got.0.unwrap(), got.1.unwrap()));
            }
        }
    }
    if !type_mismatches.is_empty() {
        o.check(false, format!("stated eigenspace types do not hold: {}", type_mismatches.join(", ")));
    }
    let report = catalog::verify_key("A4", samples);
    o.check(report.passed(), format!("catalog fixtures: {report}"));
    let report = catalog::verify_key("A4_hat", samples);
    o.check(report.passed(), format!("hypercomplex fixtures: {report}"));
    o
}

/// Every validated structure of every positive entry, one instance per key
/// and parameter.
fn positive_structures(samples: &[CirclePoint]) -> Vec<(String, ComplexProductStructure)> {
    let mut out = Vec::new();
    for key in KEYS {
        for (tag, params) in instances(key, samples) {
            let entry = get(key, &params).expect("catalog entry");
            if entry.kind != EntryKind::Positive {
                continue;
            }
            for s in &entry.structures {
                let cps = entry.cps(&s.name).expect("catalog structure validates");
                out.push((format!("{key}/{}{}", s.name, if tag.is_empty() { String::new() } else { format!(" {tag}") }), cps));
            }
        }
    }
    out
}

fn pipelines(samples: &[CirclePoint]) -> Outcome {
    let mut o = Outcome::new();
    let mut r = random::rng(2024);
    let mut probed = std::collections::HashSet::new();
    let (mut structures, mut probes) = (0, 0);
    for (name, cps) in positive_structures(samples) {
        structures += 1;
        match induced_lsa(&cps) {
            Ok((plus, minus)) => {
                for side in [&plus, &minus] {
                    o.check(check_lsa(side.base(), side.product()).passed(), format!("{name}: LSA laws"));
                }
            }
            Err(e) => o.check(false, format!("{name}: {e}")),
        }
        let mp = matched_pair_from_cps(&cps).expect("matched pair");
        o.check(check_matched_pair(mp.u(), mp.v(), mp.rho(), mp.mu()).passed(), format!("{name}: matched pair laws"));
        let c = cp_connection(&cps).expect("connection");
        o.check(is_torsion_free(&c), format!("{name}: torsion"));
        o.check(parallel_check(&c, cps.j()) && parallel_check(&c, cps.e()), format!("{name}: J or E not parallel"));
        let (rc, h) = induce_hypercomplex(&cps).expect("hypercomplex");
        let hc = extend_to_hat(&c, &rc).expect("extension");
        o.check(parallel_check(&hc, h.j1()) && parallel_check(&hc, h.j2()), format!("{name}: I^ or J^ not parallel"));
        // Uniqueness: 200 probes per entry key.
        let key = name.split('/').next().unwrap().to_string();
        if probed.insert(key) {
            for _ in 0..200 {
                probes += 1;
                let d = random::random_symmetric_perturbation(&mut r, cps.dim());
                o.check(!uniqueness_probe(&cps, &d).expect("probe"), format!("{name}: perturbation keeps J and E parallel"));
            }
        }
    }
    o.summary = format!("{structures} structures, {} entries, {probes} perturbations", probed.len());
    o
}

fn jac_lsa() -> Outcome {
    let mut o = Outcome::new();
    let mut r = random::rng(99);
    let (mut lie, mut not_lie, mut disagreements) = (0, 0, 0);
    for k in 0..150 {
        let n = 1 + k % 3;
        let p = match k % 3 {
            0 => random_bilinear_product(&mut r, n),
            1 => random_lsa(&mut r, n),
            _ => random_sparse_product(&mut r, n, 0.15),
        };
        let jacobi = check_jacobi(&aff_bracket(&p, "aff")).passed();
        let lsa = check_lsa(&p.commutator("c"), &p).passed();
        if jacobi != lsa {
            disagreements += 1;
        }
        if jacobi {
            lie += 1;
        } else {
            not_lie += 1;
        }
    }
    o.check(disagreements == 0, format!("{disagreements} disagreements"));
    o.check(lie >= 20 && not_lie >= 20, format!("unbalanced sample: {lie} Lie, {not_lie} not Lie"));
    o.summary = format!("{} products: {lie} Lie, {not_lie} not Lie, {disagreements} disagreements", lie + not_lie);
    o
}

fn negatives(samples: &[CirclePoint]) -> Outcome {
    let mut o = Outcome::new();
    let h2 = get("H2", &Params::none()).unwrap();
    o.check(!is_abelian_cs(&h2.algebra, h2.complex_structure.as_ref().unwrap()), "H2 complex structure is abelian");
    for (name, cps) in positive_structures(samples) {
        let g = cps.algebra();
        if g.is_abelian() {
            continue;
        }
        let rc = realify_complexification(g);
        let (_, hat) = induced_cps_on_hat(&cps).expect("induced");
        for e in [rc.complexify(cps.e()), hat.e().clone()] {
            o.check(validate_cps(&rc.hat, &rc.i_map, &e).is_err(), format!("{name}: I accepted as a complex structure"));
        }
    }
    let mut r = random::rng(7);
    let mut both_ideals = 0;
    for k in 0..120 {
        let cps = if k % 4 == 0 {
            let (g, j, e) = standard_abelian(1 + k % 3);
            validate_cps(&g, &j, &e).unwrap()
        } else {
            random_cps(&mut r, 1 + k % 2).expect("random structure")
        };
        let g = cps.algebra();
        if is_ideal(g, cps.plus()) && is_ideal(g, cps.minus()) {
            both_ideals += 1;
            o.check(g.is_abelian(), "both eigenspaces ideals but algebra not abelian");
        }
    }
    o.check(both_ideals > 0, "no sample with both eigenspaces ideals");
    o
}

fn forms(samples: &[CirclePoint]) -> Outcome {
    let mut o = Outcome::new();
    let mut r = random::rng(5);
    let mut pairs = 0;
    for key in KEYS {
        for (tag, params) in instances(key, samples) {
            let entry = get(key, &params).unwrap();
            let g = &entry.algebra;
            for _ in 0..50 {
                let f = KForm::from_covector(&random::random_vector(&mut r, g.dim(), 3));
                let df = ce_differential(g, &f).unwrap();
                o.check(ce_differential(g, &df).unwrap().is_zero(), format!("{key} {tag}: d^2 != 0"));
            }
            for s in &entry.structures {
                let e = AlmostProduct::new(s.e.clone()).unwrap();
                let dual = check_dual_product_integrability(g, &e).unwrap();
                o.check(dual == check_product_integrable(g, &s.e).passed(), format!("{key} {tag} {}: dual criterion", s.name));
                pairs += 1;
            }
        }
    }
    let algebras: Vec<LieAlgebra> = ["A2", "gl2R", "H2", "so3R"].iter().map(|k| get(k, &Params::none()).unwrap().algebra).collect();
    let (mut yes, mut no) = (0, 0);
    for k in 0..50 {
        // Odd draws come from random complex product structures, so both
        // outcomes of the criterion are exercised.
        let (g, e) = if k % 2 == 0 {
            let g = algebras[k % algebras.len()].clone();
            let e = random_almost_product(&mut r, g.dim());
            (g, e)
        } else {
            let cps = random_cps(&mut r, 1 + k % 4 / 2).expect("random structure");
            (cps.algebra().clone(), AlmostProduct::new(cps.e().clone()).unwrap())
        };
        let direct = check_product_integrable(&g, e.matrix()).passed();
        o.check(check_dual_product_integrability(&g, &e).unwrap() == direct, "random almost product: dual criterion");
        if direct {
            yes += 1;
        } else {
            no += 1;
        }
    }
    let (g, j, e) = standard_abelian(2);
    let cps = validate_cps(&g, &j, &e).unwrap();
    let w1 = KForm::from_entries(4, 2, &[(vec![0, 1], liecps::linalg::q(1)), (vec![2, 3], liecps::linalg::q(1))]).unwrap();
    match hypersymplectic_suite(&cps, &w1) {
        Ok(s) => {
            o.check(s.signature == (2, 2), format!("signature {:?}", s.signature));
            o.check(all_passed(&s.checks), "hypersymplectic checks");
        }
        Err(e) => o.check(false, e.to_string()),
    }
    o.summary = format!("{pairs} catalog pairs; 50 random structures: {yes} integrable, {no} not");
    o
}

fn main() -> ExitCode {
    let samples = default_samples();
    type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("gl(2,R) structure, eigenspaces, flat connection, gl(2,C) hypercomplex lines", Box::new(gl2r)),
        ("A2 products, associators, obstruction, curvature", Box::new(a2)),
        ("h3+R family at t = 0, 1, -1, 1/2, 3", Box::new({
            let s = samples.clone();
            move || h3r(&s)
        })),
        ("A4 families, eigenspace types, hypercomplex fixtures", Box::new({
            let s = samples.clone();
            move || a4(&s)
        })),
        ("pipelines on every positive catalog structure", Box::new({
            let s = samples.clone();
            move || pipelines(&s)
        })),
        ("aff bracket is Lie iff the product is left-symmetric", Box::new(jac_lsa)),
        ("negative and structural fixtures", Box::new({
            let s = samples.clone();
            move || negatives(&s)
        })),
        ("forms: d^2, dual criterion, hypersymplectic suite", Box::new({
            let s = samples.clone();
            move || forms(&s)
        })),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let out = run();
        let summary = if out.summary.is_empty() { String::new() } else { format!(" [{}]", out.summary) };
        if out.passed() {
            println!("PASS {}: {title}{summary}", k + 1);
        } else {
            failed += 1;
            println!("FAIL {}: {title}{summary}", k + 1);
            for n in &out.notes {
                println!("    {n}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
