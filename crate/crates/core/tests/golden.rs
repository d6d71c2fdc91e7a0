use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use serde_json::Value;

use qtwist::field::parse_rational;
use qtwist::twist::{
    build_full, cg3_reference, match_parameters, r_esoteric, r_standard_direct, r_standard_factorized,
};
use qtwist::{Assignment, FieldElem, Numeric, Rational, Rep, SparseMat, Symbolic, TwistParams, Var};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", "v1", name]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn symbolic_fixture(name: &str) -> SparseMat<FieldElem> {
    SparseMat::from_json_str(&fixture(name)).unwrap()
}

fn numeric_fixture(name: &str) -> (Assignment, SparseMat<Rational>) {
    let v: Value = serde_json::from_str(&fixture(name)).unwrap();
    let point = Assignment::from_json(&v["assignment"].to_string()).unwrap();
    let m = &v["matrix"];
    let dim = m["dim"].as_u64().unwrap() as usize;
    let entries = m["entries"].as_array().unwrap().iter().map(|e| {
        let r = e[0].as_u64().unwrap() as usize - 1;
        let c = e[1].as_u64().unwrap() as usize - 1;
        (r, c, parse_rational(e[2].as_str().unwrap()).unwrap())
    });
    (point, SparseMat::from_entries(dim, entries).unwrap())
}

#[test]
fn standard_gl3_matches_and_renders_canonically() {
    let rep = Rep::new(3, Symbolic).unwrap();
    let expect = symbolic_fixture("rs_gl3.json");
    let direct = r_standard_direct(&rep).unwrap();
    assert_eq!(direct, expect);
    assert_eq!(r_standard_factorized(&rep).unwrap(), expect);
    let golden: Value = serde_json::from_str(&fixture("rs_gl3.json")).unwrap();
    assert_eq!(direct.to_json_value(), golden);
}

#[test]
fn esoteric_gl3_matches() {
    let p = TwistParams::new(1).unwrap();
    let rep = Rep::new(3, Symbolic).unwrap();
    let r = r_esoteric(&rep, &p).unwrap();
    let first = r.first_difference(&symbolic_fixture("rfg_n1.json"));
    assert!(first.is_none(), "{first:?}");
    assert_eq!(r.nnz(), 14);
}

#[test]
fn twist_image_gl3_matches() {
    let p = TwistParams::new(1).unwrap();
    let rep = Rep::new(3, Symbolic).unwrap();
    assert_eq!(
        build_full(&p).eval(&rep).unwrap(),
        symbolic_fixture("twist_n1_image.json")
    );
}

#[test]
fn reference_and_solution_match() {
    let reference = cg3_reference();
    assert_eq!(reference, symbolic_fixture("cg3_reference.json"));

    let p = TwistParams::new(1).unwrap();
    let rep = Rep::new(3, Symbolic).unwrap();
    let r = r_esoteric(&rep, &p).unwrap();
    let solved = match_parameters(&r, &reference, &[Var::P, Var::Nu]).unwrap();
    let golden: BTreeMap<String, String> = serde_json::from_str(&fixture("cg3_solution.json")).unwrap();
    assert_eq!(solved.len(), 2);
    for (name, text) in golden {
        let var: Var = name.parse().unwrap();
        let expect: FieldElem = text.parse().unwrap();
        assert_eq!(solved[&var], expect, "{name}");
    }
}

#[test]
fn esoteric_numeric_rank_two_and_three_match() {
    for (name, n_half) in [("rfg_n2_primes.json", 2), ("rfg_n3_primes.json", 3)] {
        let (point, expect) = numeric_fixture(name);
        let p = TwistParams::new(n_half).unwrap();
        let rep = Rep::new(p.n(), Numeric(point.clone())).unwrap();
        let r = r_esoteric(&rep, &p).unwrap();
        let first = r.first_difference(&expect);
        assert!(first.is_none(), "{name}: {first:?}");

        // symbolic computation specialized at the same point agrees too
        let symbolic = r_esoteric(&Rep::new(p.n(), Symbolic).unwrap(), &p).unwrap();
        let specialized = symbolic.map(|x| point.substitute(x)).unwrap();
        assert_eq!(specialized, expect, "{name}");
    }
}
