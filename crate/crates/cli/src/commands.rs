use std::path::Path;

use liecps::catalog::{self, default_samples, instances, two_dim_type, CatalogEntry, EntryKind, TwoDimType, KEYS};
use liecps::connection::{
    cp_connection, cp_connection_adapted, curvature, curvature_witnesses, is_flat, parallel_check, torsion,
};
use liecps::forms::{
    ce_differential, compatible_metric_suite, hypersymplectic_suite, Check, SymmetricForm,
};
use liecps::hypercomplex::{hypercomplex_report, induce_hypercomplex, iterate_family};
use liecps::linalg::format_rational;
use liecps::lsa::{aff_construction, bicrossproduct, check_lsa, check_matched_pair, induced_lsa, matched_pair_from_cps, BilinearProduct};
use liecps::schema::{
    matrix_doc, matrix_from_doc, AlgebraDoc, ConnectionDoc, CpsDoc, FormDoc, HypercomplexDoc, MatchedPairDoc,
    MatrixDoc, ProductDoc,
};
use liecps::structures::ComplexProductStructure;
use liecps::{BracketTable, Error, Matrix, Result, Subspace, Tensor};
use serde_json::{json, Value};

use crate::input::{read_doc, read_product, samples, Source};
use crate::output::Outcome;

fn to_value<T: serde::Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn show_matrix(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = m.row_vectors().iter().map(|r| r.iter().map(format_rational).collect()).collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| r.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn show_span(g: &BracketTable, s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| g.show(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn type_name(t: Option<TwoDimType>) -> &'static str {
    match t {
        Some(TwoDimType::Abelian) => "abelian",
        Some(TwoDimType::Aff) => "aff(R)",
        None => "-",
    }
}

fn products(p: &BilinearProduct) -> String {
    let n = p.dim();
    let l = p.labels();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = p.mul_basis(i, j);
            if v.iter().any(|x| !num_is_zero(x)) {
                lines.push(format!("{} . {} = {}", l[i], l[j], p.show(v)));
            }
        }
    }
    if lines.is_empty() {
        "zero product".into()
    } else {
        lines.join("\n")
    }
}

fn brackets(g: &BracketTable) -> String {
    let lines: Vec<String> = g
        .nonzero_pairs()
        .iter()
        .map(|(i, j, v)| format!("[{}, {}] = {}", g.labels()[*i], g.labels()[*j], g.show(v)))
        .collect();
    if lines.is_empty() {
        "abelian".into()
    } else {
        lines.join("\n")
    }
}

fn num_is_zero(x: &liecps::Rational) -> bool {
    *x == liecps::Rational::from_integer(0.into())
}

fn suite_checks(o: &mut Outcome, checks: &[Check]) {
    for c in checks {
        o.check(c.name, c.passed, "");
    }
}

fn describe_cps(o: &mut Outcome, cps: &ComplexProductStructure) {
    let g = cps.algebra();
    o.info("algebra", format!("{} (dim {})", g.name(), g.dim()));
    o.info("brackets", brackets(g));
    o.info("plus", show_span(g, cps.plus()));
    o.info("minus", show_span(g, cps.minus()));
    if cps.half() == 2 {
        o.info("types", format!("{} / {}", type_name(two_dim_type(g, cps.plus())), type_name(two_dim_type(g, cps.minus()))));
    }
}

pub fn verify_cps(s: &Source) -> Result<Outcome> {
    let cps = s.cps()?;
    let mut o = Outcome::default();
    describe_cps(&mut o, &cps);
    o.check("CPS", true, "");
    o.doc = Some(to_value(&CpsDoc::from_cps(&cps)));
    Ok(o)
}

pub fn lsa(s: &Source, product: Option<&Path>) -> Result<Outcome> {
    let mut o = Outcome::default();
    if let Some(path) = product {
        let p = read_product(path)?;
        o.info("product", products(&p));
        o.report("LSA", &check_lsa(&p.commutator("commutator"), &p));
        o.doc = Some(to_value(&ProductDoc::from_product(&p)));
        return Ok(o);
    }
    let cps = s.cps()?;
    let (plus, minus) = induced_lsa(&cps)?;
    o.info("plus", products(plus.product()));
    o.info("minus", products(minus.product()));
    o.report("LSA-PLUS", &check_lsa(plus.base(), plus.product()));
    o.report("LSA-MINUS", &check_lsa(minus.base(), minus.product()));
    o.doc = Some(json!({
        "plus": to_value(&ProductDoc::from_product(plus.product())),
        "minus": to_value(&ProductDoc::from_product(minus.product())),
    }));
    Ok(o)
}

pub fn matched_pair(s: &Source, pair: Option<&Path>) -> Result<Outcome> {
    let mut o = Outcome::default();
    let doc = match pair {
        Some(path) => read_doc::<MatchedPairDoc>(path)?,
        None => MatchedPairDoc::from_pair(&matched_pair_from_cps(&s.cps()?)?),
    };
    let (u, v) = (doc.u.to_table()?, doc.v.to_table()?);
    let rho = doc.rho.iter().map(matrix_from_doc).collect::<Result<Vec<_>>>()?;
    let mu = doc.mu.iter().map(matrix_from_doc).collect::<Result<Vec<_>>>()?;
    o.info("u", brackets(&u));
    o.info("v", brackets(&v));
    o.report("MATCHED-PAIR", &check_matched_pair(&u, &v, &rho, &mu));
    o.doc = Some(to_value(&doc));
    Ok(o)
}

pub fn bicross(s: &Source, pair: Option<&Path>) -> Result<Outcome> {
    let mut o = Outcome::default();
    let (mp, original) = match pair {
        Some(path) => (read_doc::<MatchedPairDoc>(path)?.to_pair()?, None),
        None => {
            let cps = s.cps()?;
            (matched_pair_from_cps(&cps)?, Some(cps.adapted_algebra()))
        }
    };
    let b = bicrossproduct(&mp)?;
    o.info("bicrossproduct", brackets(&b));
    if let Some(g) = original {
        let same = b.same_constants(&g);
        o.check("ROUND-TRIP", same, if same { "" } else { "structure constants differ from the adapted basis of g" });
    }
    o.doc = Some(to_value(&AlgebraDoc::from_table(&b)));
    Ok(o)
}

pub fn aff(product: &Path) -> Result<Outcome> {
    let p = read_product(product)?;
    let (_, cps) = aff_construction(&p, "aff(A)")?;
    let mut o = Outcome::default();
    describe_cps(&mut o, &cps);
    o.check("CPS", true, "");
    o.doc = Some(to_value(&CpsDoc::from_cps(&cps)));
    Ok(o)
}

pub struct ConnectionFlags {
    pub torsion: bool,
    pub curvature: bool,
    pub flat: bool,
    pub full: bool,
}

fn nonzero_lines(t: &Tensor, labels: &[String], show: impl Fn(&[liecps::Rational]) -> String) -> Vec<String> {
    let shape = t.shape().to_vec();
    let mut out = Vec::new();
    let prefix_len = shape.len() - 1;
    let mut idx = vec![0usize; prefix_len];
    loop {
        let v = t.fiber(&idx);
        if v.iter().any(|x| !num_is_zero(x)) {
            let args: Vec<&str> = idx.iter().map(|&i| labels[i].as_str()).collect();
            out.push(format!("({}) ↦ {}", args.join(", "), show(v)));
        }
        let mut k = prefix_len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < shape[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub fn connection(s: &Source, flags: ConnectionFlags) -> Result<Outcome> {
    let cps = s.cps()?;
    let c = cp_connection(&cps)?;
    let g = cps.algebra();
    let t = torsion(&c);
    let r = curvature(&c);
    let mut o = Outcome::default();
    o.info("torsion entries", t.nonzero_count().to_string());
    o.info("curvature entries", r.nonzero_count().to_string());
    o.check("TORSION", t.is_zero(), "");
    o.check("PARALLEL-J", parallel_check(&c, cps.j()), "");
    o.check("PARALLEL-E", parallel_check(&c, cps.e()), "");
    let labels = g.labels().to_vec();
    if flags.torsion && !t.is_zero() {
        o.info("torsion", nonzero_lines(&t, &labels, |v| g.show(v)).join("\n"));
    }
    // Witnesses are given in the adapted frame, where they are sparsest.
    let adapted = cp_connection_adapted(&cps)?;
    let witnesses: Vec<String> =
        curvature_witnesses(&adapted).iter().map(|(x, y, z, v)| format!("({x}, {y}, {z}) ↦ {v}")).collect();
    if flags.curvature && !witnesses.is_empty() {
        o.info("curvature", witnesses.join("\n"));
    }
    if flags.flat {
        let detail = witnesses.first().cloned().unwrap_or_default();
        o.check("EQ-FLAT", is_flat(&c), detail);
    }
    let mut doc = json!({ "connection": to_value(&ConnectionDoc::from_connection(&c)) });
    if flags.full {
        doc["torsion"] = json!(nonzero_lines(&t, &labels, |v| g.show(v)));
        doc["curvature"] = json!(nonzero_lines(&r, &labels, |v| g.show(v)));
    }
    o.doc = Some(doc);
    Ok(o)
}

pub fn hypercomplex(s: &Source, check: Option<&Path>) -> Result<Outcome> {
    let mut o = Outcome::default();
    let (g, j1, j2) = match check {
        Some(path) => {
            let doc = read_doc::<HypercomplexDoc>(path)?;
            let g = doc.algebra.to_algebra()?;
            let n = g.dim();
            let sq = |m: &MatrixDoc| liecps::schema::square_from_doc(m, n);
            let (j1, j2) = (sq(&doc.j1)?, sq(&doc.j2)?);
            (g, j1, j2)
        }
        None => {
            let (rc, h) = induce_hypercomplex(&s.cps()?)?;
            (rc.hat, h.j1().clone(), h.j2().clone())
        }
    };
    o.info("algebra", format!("{} (dim {})", g.name(), g.dim()));
    o.info("J1", show_matrix(&j1));
    o.info("J2", show_matrix(&j2));
    o.report("HYPERCOMPLEX", &hypercomplex_report(&g, &j1, &j2));
    o.doc = Some(to_value(&HypercomplexDoc { algebra: AlgebraDoc::from_table(&g), j1: matrix_doc(&j1), j2: matrix_doc(&j2) }));
    Ok(o)
}

pub fn iterate(s: &Source, k: usize, cap: usize) -> Result<Outcome> {
    let stage = iterate_family(&s.cps()?, k, cap)?;
    let h = &stage.hypercomplex;
    let mut o = Outcome::default();
    o.info("stage", stage.k.to_string());
    o.info("dimension", h.algebra().dim().to_string());
    o.report("HYPERCOMPLEX", &hypercomplex_report(h.algebra(), h.j1(), h.j2()));
    o.doc = Some(json!({
        "hypercomplex": to_value(&HypercomplexDoc::from_structure(h)),
        "cps": to_value(&CpsDoc::from_cps(&stage.cps)),
    }));
    Ok(o)
}

pub fn forms(s: &Source, metric: Option<&Path>, hyper: Option<&Path>, diff: Option<&Path>) -> Result<Outcome> {
    if metric.is_none() && hyper.is_none() && diff.is_none() {
        return Err(Error::Parse("forms needs --metric, --hypersymplectic or --differential".into()));
    }
    let cps = s.cps()?;
    let mut o = Outcome::default();
    let mut doc = serde_json::Map::new();
    if let Some(path) = metric {
        let m = matrix_from_doc(&read_doc::<MatrixDoc>(path)?)?;
        let suite = compatible_metric_suite(&cps, &SymmetricForm::new(m)?)?;
        suite_checks(&mut o, &suite.checks);
        if let Some(w) = &suite.omega {
            doc.insert("omega".into(), to_value(&FormDoc::from_form(w)));
        }
    }
    if let Some(path) = hyper {
        let w1 = read_doc::<FormDoc>(path)?.to_form()?;
        let suite = hypersymplectic_suite(&cps, &w1)?;
        o.info("signature", format!("({}, {})", suite.signature.0, suite.signature.1));
        suite_checks(&mut o, &suite.checks);
        doc.insert("h".into(), json!(matrix_doc(&suite.h)));
        doc.insert("omega2".into(), json!(matrix_doc(&suite.w2)));
        doc.insert("omega3".into(), json!(matrix_doc(&suite.w3)));
    }
    if let Some(path) = diff {
        let f = read_doc::<FormDoc>(path)?.to_form()?;
        let df = ce_differential(cps.algebra(), &f)?;
        o.info("closed", df.is_zero().to_string());
        doc.insert("differential".into(), to_value(&FormDoc::from_form(&df)));
    }
    o.doc = Some(Value::Object(doc));
    Ok(o)
}

fn kind_name(k: &EntryKind) -> String {
    match k {
        EntryKind::Positive => "complex product structures".into(),
        EntryKind::Negative => "no complex product structure".into(),
        EntryKind::Decomposition => "decomposition".into(),
        EntryKind::Hypercomplex { base } => format!("hypercomplex, from {base}"),
    }
}

fn parameter_hint(key: &str) -> &'static str {
    match key {
        "Cn_abelian" | "gl2nR" | "spn" => "--n",
        "affA" => "--with-product",
        k if catalog::is_family(k) => "--t",
        _ => "",
    }
}

pub fn catalog_list() -> Result<Outcome> {
    let mut o = Outcome::default();
    let samples = default_samples();
    let mut rows = Vec::new();
    for key in KEYS {
        let (_, params) = instances(key, &samples).into_iter().next().expect("every key has an instance");
        let entry = catalog::get(key, &params)?;
        o.info(*key, format!("{}  [{}] {}", entry.title, kind_name(&entry.kind), parameter_hint(key)));
        rows.push(json!({"key": key, "title": entry.title, "kind": kind_name(&entry.kind), "parameter": parameter_hint(key)}));
    }
    o.doc = Some(json!(rows));
    Ok(o)
}

fn entry_doc(e: &CatalogEntry) -> Value {
    let labels = e.algebra.labels().to_vec();
    json!({
        "key": e.key,
        "title": e.title,
        "kind": kind_name(&e.kind),
        "algebra": to_value(&AlgebraDoc::from_table(&e.algebra)),
        "structures": e.structures.iter().map(|s| json!({"name": s.name, "J": matrix_doc(&s.j), "E": matrix_doc(&s.e)})).collect::<Vec<_>>(),
        "excluded": e.excluded,
        "complex_structure": e.complex_structure.as_ref().map(matrix_doc),
        "subspaces": e.subspaces.iter().map(|(n, s)| json!({"name": n, "basis": s.basis().iter().map(|v| liecps::schema::combination_doc(&labels, v)).collect::<Vec<_>>()})).collect::<Vec<_>>(),
        "invariant_forms": e.invariant_forms.iter().map(matrix_doc).collect::<Vec<_>>(),
        "errata": e.errata.iter().map(|x| json!({"item": x.item, "printed": x.printed, "corrected": x.corrected, "reason": x.reason})).collect::<Vec<_>>(),
    })
}

pub fn catalog_show(s: &Source) -> Result<Outcome> {
    let e = s.entry()?.ok_or_else(|| Error::Parse("catalog show needs --catalog KEY".into()))?;
    let mut o = Outcome::default();
    o.info("title", e.title.clone());
    o.info("kind", kind_name(&e.kind));
    o.info("basis", e.algebra.labels().join(", "));
    o.info("brackets", brackets(&e.algebra));
    for st in &e.structures {
        o.info(format!("{} J", st.name), show_matrix(&st.j));
        o.info(format!("{} E", st.name), show_matrix(&st.e));
    }
    if !e.excluded.is_empty() {
        o.info("excluded", e.excluded.join(", "));
    }
    if let Some(j) = &e.complex_structure {
        o.info("J", show_matrix(j));
    }
    for (name, sub) in &e.subspaces {
        o.info(name.clone(), show_span(&e.algebra, sub));
    }
    if !e.invariant_forms.is_empty() {
        o.info("invariant forms", format!("{} independent", e.invariant_forms.len()));
    }
    for x in &e.errata {
        o.info("erratum", format!("{}: printed {}, stored {} ({})", x.item, x.printed, x.corrected, x.reason));
    }
    o.doc = Some(entry_doc(&e));
    Ok(o)
}

pub fn catalog_verify(key: Option<&str>, ts: &[String]) -> Result<Outcome> {
    let pts = if ts.is_empty() { default_samples() } else { samples(ts)? };
    let keys: Vec<&str> = match key {
        Some(k) if KEYS.contains(&k) => vec![k],
        Some(k) => return Err(Error::UnknownKey(k.into())),
        None => KEYS.to_vec(),
    };
    let mut o = Outcome::default();
    for k in keys {
        let r = catalog::verify_key(k, &pts);
        if r.passed() {
            o.check(k, true, "");
        }
        for v in &r.violations {
            o.check(k, false, format!("{} at ({}): {}", v.law, v.at.join(", "), v.residual));
        }
    }
    Ok(o)
}
