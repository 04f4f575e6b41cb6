use super::*;
use crate::buchberger::buchberger;
use crate::field::PrimeField;
use crate::poly::text::parse_polynomial;
use crate::poly::VarSet;
use proptest::prelude::*;

fn ring(order: MonomialOrder) -> PolyRing {
    PolyRing::new(PrimeField::new(7).unwrap(), 2, order)
}

fn polys(ring: &PolyRing, src: &[&str]) -> Vec<Polynomial> {
    let vars = VarSet::new(["x", "y"]).unwrap();
    src.iter().map(|s| parse_polynomial(s, &vars, ring).unwrap()).collect()
}

fn mono(e: &[u16]) -> Monomial {
    Monomial::from_exps(e)
}

fn grevlex_basis() -> (PolyRing, Vec<Polynomial>) {
    let r = ring(MonomialOrder::Grevlex);
    let g = polys(&r, &["y^2 - x", "x*y - 1", "x^2 - y"]);
    (r, g)
}

#[test]
fn quotient_basis_examples() {
    let (r, g) = grevlex_basis();
    assert_eq!(
        quotient_basis(&r, &g).unwrap(),
        [mono(&[0, 0]), mono(&[0, 1]), mono(&[1, 0])]
    );

    let r1 = PolyRing::new(PrimeField::new(7).unwrap(), 1, MonomialOrder::Lex);
    let x = r1.var(0);
    assert_eq!(
        quotient_basis(&r1, std::slice::from_ref(&x)).unwrap(),
        [Monomial::one(1)]
    );

    let x2 = r.var(0);
    assert_eq!(quotient_basis(&r, &[x2]).unwrap_err(), MmmError::NotZeroDimensional(1));
    assert!(quotient_basis(&r, &[r.one()]).unwrap().is_empty());
}

#[test]
fn normal_form_map_evaluations() {
    let (r, g) = grevlex_basis();
    let map = nf_map_from_gb(&r, &g).unwrap();
    assert_eq!(map.dim(), 3);
    let f = r.field();
    let coord = |k: usize| SparseVec::from_entries(f, [(k, FieldElem::ONE)]);
    let pos = |m: &[u16]| map.quotient().iter().position(|q| q == &mono(m)).unwrap();
    assert_eq!(map.eval(&mono(&[0, 2])), coord(pos(&[1, 0])));
    assert_eq!(map.eval(&mono(&[0, 0])), coord(pos(&[0, 0])));
    assert_eq!(map.eval(&mono(&[0, 3])), coord(pos(&[0, 0])));
    let p = polys(&r, &["y^3 - 1"]).pop().unwrap();
    assert!(map.eval_poly(&r, &p).is_zero());
}

#[test]
fn fglm_worked_example_trace() {
    let (r, g) = grevlex_basis();
    let map = nf_map_from_gb(&r, &g).unwrap();
    let lex = r.with_order(MonomialOrder::Lex);
    let k = mmm_kernel_gb(&lex, &map);
    assert_eq!(k.basis, polys(&lex, &["x - y^2", "y^3 - 1"]));
    let leads: Vec<Monomial> = k.echelon.rows().iter().map(|row| row.lead.clone()).collect();
    assert_eq!(leads, [mono(&[0, 0]), mono(&[0, 1]), mono(&[0, 2])]);
    assert_eq!(k.staircase, [mono(&[0, 3]), mono(&[1, 0])]);
    assert_eq!(k.evaluations, 5);

    let oracle = lex.interreduce(&buchberger(&lex, &polys(&lex, &["x^2 - y", "x*y - 1"])));
    assert_eq!(fglm(&r, &g, MonomialOrder::Lex).unwrap(), oracle);
}

#[test]
fn fglm_examples() {
    let lex = ring(MonomialOrder::Lex);
    let g = polys(&lex, &["x^2 - 1", "y^2 - 1"]);
    let out = fglm(&lex, &g, MonomialOrder::Grevlex).unwrap();
    assert_eq!(
        out,
        polys(&lex.with_order(MonomialOrder::Grevlex), &["x^2 - 1", "y^2 - 1"])
    );

    let (r, gb) = grevlex_basis();
    assert_eq!(fglm(&r, &gb, MonomialOrder::Grevlex).unwrap(), r.interreduce(&gb));

    assert_eq!(
        fglm(&r, &polys(&r, &["x"]), MonomialOrder::Lex).unwrap_err(),
        MmmError::NotZeroDimensional(1)
    );
}

struct ZeroMap;

impl LinearMap for ZeroMap {
    fn dim(&self) -> usize {
        1
    }
    fn eval(&self, _: &Monomial) -> SparseVec {
        SparseVec::zero()
    }
}

struct Evaluation(FieldElem);

impl LinearMap for Evaluation {
    fn dim(&self) -> usize {
        1
    }
    fn eval(&self, m: &Monomial) -> SparseVec {
        let f = PrimeField::new(7).unwrap();
        let v = (0..m.exps()[0]).fold(FieldElem::ONE, |acc, _| f.mul(acc, self.0));
        SparseVec::from_entries(&f, [(0, v)])
    }
}

#[test]
fn zero_map_kernel_is_everything() {
    let r = ring(MonomialOrder::Lex);
    let k = mmm_kernel_gb(&r, &ZeroMap);
    assert_eq!(k.basis, [r.one()]);
    assert_eq!(k.echelon.rank(), 0);
}

#[test]
fn point_evaluation_in_one_variable() {
    let r1 = PolyRing::new(PrimeField::new(7).unwrap(), 1, MonomialOrder::Lex);
    let c = r1.field().elem(3);
    let k = mmm_kernel_gb(&r1, &Evaluation(c));
    let expected = r1.sub(&r1.var(0), &r1.constant(c));
    assert_eq!(k.basis, [expected]);
    assert_eq!(k.echelon.rank(), 1);
}

fn check_kernel_invariants(dst: &PolyRing, map: &NormalFormMap, k: &KernelBasis) {
    for p in &k.basis {
        assert!(map.eval_poly(dst, p).is_zero());
    }
    assert_eq!(map.quotient().len(), k.echelon.rank());
    for (a, s) in k.staircase.iter().enumerate() {
        for (b, t) in k.staircase.iter().enumerate() {
            assert!(a == b || !s.divides(t));
        }
    }
    for p in &k.basis {
        for q in &k.basis {
            for t in p.terms() {
                assert!(std::ptr::eq(p, q) || !q.lm().divides(&t.mono));
            }
        }
    }
}

type FiniteSystem = (Vec<(u16, i64)>, Vec<(u16, i64)>, Vec<(u16, u16, i64)>);

fn finite_system() -> impl Strategy<Value = FiniteSystem> {
    // x^a + low terms, y^b + low terms, plus an arbitrary extra generator.
    (
        prop::collection::vec((0u16..3, -3i64..4), 0..3),
        prop::collection::vec((0u16..3, -3i64..4), 0..3),
        prop::collection::vec((0u16..3, 0u16..3, -3i64..4), 0..3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fglm_matches_buchberger((fx, fy, extra) in finite_system(), src in 0usize..3, dst in 0usize..3) {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), 2, MonomialOrder::ALL[src]);
        let f = r.field();
        let gx = r.from_terms(std::iter::once((mono(&[3, 0]), FieldElem::ONE))
            .chain(fx.iter().map(|&(e, c)| (mono(&[e, 1]), f.elem(c)))));
        let gy = r.from_terms(std::iter::once((mono(&[0, 3]), FieldElem::ONE))
            .chain(fy.iter().map(|&(e, c)| (mono(&[1, e]), f.elem(c)))));
        let gz = r.from_terms(extra.iter().map(|&(a, b, c)| (mono(&[a, b]), f.elem(c))));
        let gens: Vec<Polynomial> = [gx, gy, gz].into_iter().filter(|p| !p.is_zero()).collect();
        let gb = buchberger(&r, &gens);
        let dst_ring = r.with_order(MonomialOrder::ALL[dst]);
        let Ok(map) = nf_map_from_gb(&r, &gb) else {
            return Err(TestCaseError::fail("generators with pure powers must be zero-dimensional"));
        };
        let k = mmm_kernel_gb(&dst_ring, &map);
        check_kernel_invariants(&dst_ring, &map, &k);
        let reordered: Vec<Polynomial> = gens.iter().map(|g| dst_ring.reorder(g)).collect();
        prop_assert_eq!(k.basis, dst_ring.interreduce(&buchberger(&dst_ring, &reordered)));
    }
}
