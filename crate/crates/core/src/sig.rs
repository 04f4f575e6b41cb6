//! Module monomials `x^a e_j`, module orders, labeled polynomials and JPairs.
//!
//! Generator indices are 0-based here and printed 1-based (`e1`, `e2`, ...).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::field::FieldElem;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// `mono * e_index`, a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub index: usize,
    pub mono: Monomial,
}

impl ModuleMonomial {
    pub fn unit(index: usize, nvars: usize) -> Self {
        ModuleMonomial {
            index,
            mono: Monomial::one(nvars),
        }
    }

    pub fn mul(&self, t: &Monomial) -> ModuleMonomial {
        ModuleMonomial {
            index: self.index,
            mono: self.mono.mul(t),
        }
    }

    /// Same index and the monomial divides.
    #[inline]
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.mono.is_one() {
            format!("e{}", self.index + 1)
        } else {
            format!("{}*e{}", self.mono.to_string_with(names), self.index + 1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleOrderKind {
    /// Position over term, `e_1 < e_2 < ... < e_m`.
    Pot,
    /// Term over position.
    Top,
    /// Compare `mono * lm(f_index)`, ties by index.
    Schreyer,
}

impl ModuleOrderKind {
    pub const ALL: [ModuleOrderKind; 3] = [ModuleOrderKind::Pot, ModuleOrderKind::Top, ModuleOrderKind::Schreyer];

    pub fn name(&self) -> &'static str {
        match self {
            ModuleOrderKind::Pot => "pot",
            ModuleOrderKind::Top => "top",
            ModuleOrderKind::Schreyer => "schreyer",
        }
    }
}

impl fmt::Display for ModuleOrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleOrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pot" => Ok(ModuleOrderKind::Pot),
            "top" => Ok(ModuleOrderKind::Top),
            "schreyer" => Ok(ModuleOrderKind::Schreyer),
            _ => Err(format!("unknown module order '{s}' (expected pot, top or schreyer)")),
        }
    }
}

/// An order on module monomials over a base monomial order. Every kind is
/// total and multiplicative; within a fixed index all of them agree with the
/// base order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    base: MonomialOrder,
    input_lms: Vec<Monomial>,
}

impl ModuleOrder {
    /// `generators` must be canonical in a ring using `base`, nonzero.
    pub fn new(kind: ModuleOrderKind, base: MonomialOrder, generators: &[Polynomial]) -> Self {
        ModuleOrder {
            kind,
            base,
            input_lms: generators.iter().map(|f| f.lm().clone()).collect(),
        }
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.input_lms.len()
    }

    pub fn cmp(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        match self.kind {
            ModuleOrderKind::Pot => a.index.cmp(&b.index).then_with(|| self.base.cmp(&a.mono, &b.mono)),
            ModuleOrderKind::Top => self.base.cmp(&a.mono, &b.mono).then_with(|| a.index.cmp(&b.index)),
            ModuleOrderKind::Schreyer => {
                let pa = a.mono.mul(&self.input_lms[a.index]);
                let pb = b.mono.mul(&self.input_lms[b.index]);
                self.base
                    .cmp(&pa, &pb)
                    .then_with(|| a.index.cmp(&b.index))
                    .then_with(|| self.base.cmp(&a.mono, &b.mono))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a ModuleMonomial, b: &'a ModuleMonomial) -> &'a ModuleMonomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// One reduction step `h <- h - coeff * mono * basis[reducer]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub coeff: FieldElem,
    pub mono: Monomial,
    pub reducer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// The input generator with this index.
    Generator(usize),
    /// `t` times the basis element `parent`.
    JPair { t: Monomial, parent: usize },
}

/// How a labeled polynomial was produced, enough to rebuild its module vector:
/// `v = scale * (origin - sum coeff * mono * v_reducer)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenanceTrace {
    pub origin: Origin,
    pub steps: Vec<ReductionStep>,
    pub scale: FieldElem,
}

/// A module vector in `k[X]^m`, one polynomial per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector(pub Vec<Polynomial>);

impl ModuleVector {
    pub fn zero(m: usize) -> Self {
        ModuleVector(vec![Polynomial::zero(); m])
    }

    pub fn unit(ring: &PolyRing, m: usize, index: usize, c: FieldElem) -> Self {
        let mut v = ModuleVector::zero(m);
        v.0[index] = ring.constant(c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, ring: &PolyRing, c: FieldElem) -> Self {
        ModuleVector(self.0.iter().map(|p| ring.scale(p, c)).collect())
    }

    pub fn mul_term(&self, ring: &PolyRing, c: FieldElem, t: &Monomial) -> Self {
        ModuleVector(self.0.iter().map(|p| ring.mul_term(p, c, t)).collect())
    }

    pub fn mul_poly(&self, ring: &PolyRing, f: &Polynomial) -> Self {
        ModuleVector(self.0.iter().map(|p| ring.mul(p, f)).collect())
    }

    /// `self - c * t * other`.
    pub fn sub_mul_term(&self, ring: &PolyRing, c: FieldElem, t: &Monomial, other: &ModuleVector) -> Self {
        ModuleVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| ring.sub_mul_term(a, c, t, b))
                .collect(),
        )
    }

    pub fn sub(&self, ring: &PolyRing, other: &ModuleVector) -> Self {
        ModuleVector(self.0.iter().zip(&other.0).map(|(a, b)| ring.sub(a, b)).collect())
    }

    /// The homomorphism `u -> sum u_j f_j`.
    pub fn image(&self, ring: &PolyRing, generators: &[Polynomial]) -> Polynomial {
        self.0
            .iter()
            .zip(generators)
            .fold(Polynomial::zero(), |acc, (u, f)| ring.add(&acc, &ring.mul(u, f)))
    }

    /// Leading module monomial; `None` for the zero vector.
    pub fn leading(&self, mord: &ModuleOrder) -> Option<ModuleMonomial> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(index, p)| ModuleMonomial {
                index,
                mono: p.lm().clone(),
            })
            .reduce(|a, b| if mord.cmp(&a, &b) == Ordering::Less { b } else { a })
    }
}

/// `(signature, polynomial)` with its provenance. `poly` is monic.
#[derive(Debug, Clone)]
pub struct LabeledPoly {
    pub id: usize,
    pub sig: ModuleMonomial,
    pub poly: Polynomial,
    pub trace: ProvenanceTrace,
    /// Present only when vectors are tracked online.
    pub vector: Option<ModuleVector>,
}

/// `t * parent`, the signature-larger half of a critical pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JPair {
    pub t: Monomial,
    pub parent: usize,
    pub sig: ModuleMonomial,
    pub prod_lm: Monomial,
}

/// The JPair of `a` and `b`, or `None` when both sides carry the same
/// signature after multiplication to the lcm.
pub fn make_jpair(a: &LabeledPoly, b: &LabeledPoly, mord: &ModuleOrder) -> Option<JPair> {
    let lcm = a.poly.lm().lcm(b.poly.lm());
    let ta = lcm.div(a.poly.lm()).unwrap();
    let tb = lcm.div(b.poly.lm()).unwrap();
    let sa = a.sig.mul(&ta);
    let sb = b.sig.mul(&tb);
    let (t, parent, sig) = match mord.cmp(&sa, &sb) {
        Ordering::Equal => return None,
        Ordering::Greater => (ta, a.id, sa),
        Ordering::Less => (tb, b.id, sb),
    };
    Some(JPair {
        t,
        parent,
        sig,
        prod_lm: lcm,
    })
}

/// Leading module monomials of the principal syzygies `f_j e_i - f_i e_j`,
/// `i < j`, without duplicates.
pub fn principal_syzygy_lms(generators: &[Polynomial], mord: &ModuleOrder) -> Vec<ModuleMonomial> {
    let mut out: Vec<ModuleMonomial> = Vec::new();
    for j in 0..generators.len() {
        for i in 0..j {
            let a = ModuleMonomial {
                index: i,
                mono: generators[j].lm().clone(),
            };
            let b = ModuleMonomial {
                index: j,
                mono: generators[i].lm().clone(),
            };
            let lead = mord.max(&a, &b).clone();
            if !out.contains(&lead) {
                out.push(lead);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::text::parse_polynomial;
    use crate::poly::VarSet;
    use proptest::prelude::*;

    fn lex() -> (VarSet, PolyRing) {
        let vars = VarSet::new(["x", "y"]).unwrap();
        (vars, PolyRing::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Lex))
    }

    fn mm(index: usize, e: &[u16]) -> ModuleMonomial {
        ModuleMonomial {
            index,
            mono: Monomial::from_exps(e),
        }
    }

    fn generator(id: usize, f: Polynomial) -> LabeledPoly {
        LabeledPoly {
            id,
            sig: ModuleMonomial::unit(id, f.lm().nvars()),
            poly: f,
            trace: ProvenanceTrace {
                origin: Origin::Generator(id),
                steps: vec![],
                scale: FieldElem::ONE,
            },
            vector: None,
        }
    }

    fn worked() -> (PolyRing, Vec<Polynomial>) {
        let (v, r) = lex();
        let f = ["x^2 - y", "x*y - 1"]
            .iter()
            .map(|s| parse_polynomial(s, &v, &r).unwrap())
            .collect();
        (r, f)
    }

    #[test]
    fn sig_cmp_cases() {
        let (_, f) = worked();
        let pot = ModuleOrder::new(ModuleOrderKind::Pot, MonomialOrder::Lex, &f);
        assert_eq!(pot.cmp(&mm(0, &[1, 0]), &mm(1, &[0, 1])), Ordering::Less);
        let schreyer = ModuleOrder::new(ModuleOrderKind::Schreyer, MonomialOrder::Lex, &f);
        assert_eq!(schreyer.cmp(&mm(0, &[0, 1]), &mm(1, &[1, 0])), Ordering::Less);
        let top = ModuleOrder::new(ModuleOrderKind::Top, MonomialOrder::Lex, &f);
        for o in [&pot, &top, &schreyer] {
            assert_eq!(o.cmp(&mm(1, &[2, 3]), &mm(1, &[2, 3])), Ordering::Equal);
        }
        assert_eq!(top.cmp(&mm(0, &[1, 0]), &mm(1, &[0, 1])), Ordering::Greater);
    }

    #[test]
    fn jpairs() {
        let (_, f) = worked();
        let a = generator(0, f[0].clone());
        let b = generator(1, f[1].clone());
        let pot = ModuleOrder::new(ModuleOrderKind::Pot, MonomialOrder::Lex, &f);
        let jp = make_jpair(&a, &b, &pot).unwrap();
        assert_eq!(
            jp,
            JPair {
                t: Monomial::from_exps(&[1, 0]),
                parent: 1,
                sig: mm(1, &[1, 0]),
                prod_lm: Monomial::from_exps(&[2, 1]),
            }
        );
        assert_eq!(make_jpair(&b, &a, &pot), Some(jp.clone()));
        assert_eq!(make_jpair(&a, &a, &pot), None);
        let schreyer = ModuleOrder::new(ModuleOrderKind::Schreyer, MonomialOrder::Lex, &f);
        assert_eq!(make_jpair(&a, &b, &schreyer), Some(jp));
    }

    #[test]
    fn principal_lms() {
        let (_, f) = worked();
        let pot = ModuleOrder::new(ModuleOrderKind::Pot, MonomialOrder::Lex, &f);
        assert!(principal_syzygy_lms(&f[..1], &pot).is_empty());
        assert_eq!(principal_syzygy_lms(&f, &pot), vec![mm(1, &[2, 0])]);
        let schreyer = ModuleOrder::new(ModuleOrderKind::Schreyer, MonomialOrder::Lex, &f);
        assert_eq!(principal_syzygy_lms(&f, &schreyer), vec![mm(1, &[2, 0])]);
    }

    #[test]
    fn vector_leading_and_image() {
        let (r, f) = worked();
        let pot = ModuleOrder::new(ModuleOrderKind::Pot, MonomialOrder::Lex, &f);
        // f2 e1 - f1 e2 is a syzygy with leading monomial x^2 e2
        let v = ModuleVector(vec![f[1].clone(), r.neg(&f[0])]);
        assert!(v.image(&r, &f).is_zero());
        assert_eq!(v.leading(&pot), Some(mm(1, &[2, 0])));
        assert_eq!(ModuleVector::zero(2).leading(&pot), None);
    }

    fn module_mono() -> impl Strategy<Value = ModuleMonomial> {
        (0usize..3, prop::collection::vec(0u16..4, 2)).prop_map(|(i, e)| mm(i, &e))
    }

    fn three_gens() -> Vec<Polynomial> {
        let (v, r) = lex();
        ["x^2 - y", "x*y - 1", "y^3 + x"]
            .iter()
            .map(|s| parse_polynomial(s, &v, &r).unwrap())
            .collect()
    }

    proptest! {
        #[test]
        fn module_orders_are_multiplicative(
            kind in prop::sample::select(ModuleOrderKind::ALL.to_vec()),
            base in prop::sample::select(MonomialOrder::ALL.to_vec()),
            a in module_mono(), b in module_mono(), c in module_mono(),
            t in prop::collection::vec(0u16..4, 2),
        ) {
            let gens = three_gens();
            let gens: Vec<Polynomial> = {
                let r = PolyRing::new(PrimeField::new(7).unwrap(), 2, base);
                gens.iter().map(|g| r.reorder(g)).collect()
            };
            let o = ModuleOrder::new(kind, base, &gens);
            let t = Monomial::from_exps(&t);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&t), &b.mul(&t)));
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            if o.cmp(&a, &b) == Ordering::Equal { prop_assert_eq!(&a, &b); }
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn jpair_symmetry_and_dominance(
            kind in prop::sample::select(ModuleOrderKind::ALL.to_vec()),
            sa in prop::collection::vec(0u16..3, 2),
            sb in prop::collection::vec(0u16..3, 2),
            ia in 0usize..3, ib in 0usize..3,
        ) {
            let gens = three_gens();
            let o = ModuleOrder::new(kind, MonomialOrder::Lex, &gens);
            let mut a = generator(0, gens[ia].clone());
            a.sig = mm(ia, &sa);
            let mut b = generator(1, gens[ib].clone());
            b.sig = mm(ib, &sb);
            let ab = make_jpair(&a, &b, &o);
            prop_assert_eq!(&ab, &make_jpair(&b, &a, &o));
            if let Some(jp) = ab {
                let lcm = a.poly.lm().lcm(b.poly.lm());
                let s1 = a.sig.mul(&lcm.div(a.poly.lm()).unwrap());
                let s2 = b.sig.mul(&lcm.div(b.poly.lm()).unwrap());
                let (win, lose) = if jp.parent == a.id { (s1, s2) } else { (s2, s1) };
                prop_assert_eq!(&jp.sig, &win);
                prop_assert_eq!(o.cmp(&jp.sig, &lose), Ordering::Greater);
            }
        }
    }
}
