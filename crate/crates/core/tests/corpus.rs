use std::path::Path;

use sigbasis::mmm::quotient_basis;
use sigbasis::{
    buchberger, fglm, gvw_run, is_groebner, parse_problem, GvwConfig, ModuleOrderKind, MonomialOrder, Problem,
};

fn load(name: &str) -> Problem {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("{name}.ideal"));
    parse_problem(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn corpus_files_parse_with_expected_shapes() {
    for (name, nvars, ngens, modulus) in [
        ("worked_example", 2, 2, 7),
        ("katsura3", 4, 4, 32003),
        ("katsura4", 5, 5, 32003),
        ("cyclic4", 4, 4, 32003),
        ("random_quadrics_3", 3, 3, 32003),
    ] {
        let p = load(name);
        assert_eq!(p.vars.names().len(), nvars, "{name}");
        assert_eq!(p.generators.len(), ngens, "{name}");
        assert_eq!(p.field.modulus(), modulus, "{name}");
        assert_eq!(parse_problem(&p.to_text()).unwrap().generators, p.generators, "{name}");
    }
}

#[test]
fn gvw_matches_buchberger_in_file_order() {
    for name in [
        "worked_example",
        "katsura3",
        "cyclic4",
        "random_quadrics_1",
        "random_quadrics_2",
    ] {
        let p = load(name);
        let ring = p.ring();
        let (gens, _) = p.nonzero_generators();
        let expected = ring.interreduce(&buchberger(&ring, &gens));
        for kind in ModuleOrderKind::ALL {
            let state = gvw_run(ring, &gens, kind, GvwConfig::default()).unwrap();
            let raw = state.basis_polys();
            assert!(is_groebner(&ring, &raw), "{name}/{}", kind.name());
            assert_eq!(ring.interreduce(&raw), expected, "{name}/{}", kind.name());
        }
    }
}

#[test]
fn zero_dimensional_quotients_have_bezout_size() {
    for (name, dim) in [("worked_example", 3), ("katsura3", 8), ("random_quadrics_4", 8)] {
        let p = load(name);
        let ring = p.ring();
        let (gens, _) = p.nonzero_generators();
        let gb = ring.interreduce(&buchberger(&ring, &gens));
        assert_eq!(quotient_basis(&ring, &gb).unwrap().len(), dim, "{name}");
    }
}

#[test]
fn fglm_round_trip_on_katsura3() {
    let p = load("katsura3");
    let ring = p.ring();
    let (gens, _) = p.nonzero_generators();
    let grevlex = ring.interreduce(&buchberger(&ring, &gens));
    let lex = fglm(&ring, &grevlex, MonomialOrder::Lex).unwrap();
    let lex_ring = ring.with_order(MonomialOrder::Lex);
    let back = fglm(&lex_ring, &lex, MonomialOrder::Grevlex).unwrap();
    assert_eq!(back, grevlex);
}
