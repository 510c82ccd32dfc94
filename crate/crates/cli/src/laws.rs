//! The seeded law harness. Every law is checked exactly on random inputs;
//! trial `i` of law `n` draws from [`trial_rng`]`(seed, n, i)`, so reports
//! do not depend on scheduling.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value as Json};
use tdhopf_core::{
    free_extension, Ambient, BaseElement, BaseSquare, BaseZeroTarget, Coefficient, Combination, FreeTarget, LawId,
    LawVerdict, LinearMapTable, Monomial, OperatorId, Rational, Space, TdAlgebra, TensorElement, TensorSquare,
    TensorTriple, TensorWord,
};

use crate::random::{self, trial_rng, Shape};
use crate::render::{coefficient_json, element_json, square_json, triple_json, word_json};

/// One labelled value in a counterexample.
#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub label: String,
    pub text: String,
    pub json: Json,
}

pub type Evidence = Vec<Item>;
pub type Check = Result<(), Evidence>;

pub trait Show {
    fn text(&self) -> String;
    fn json(&self) -> Json;
}

impl Show for TensorElement {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        element_json(self)
    }
}

impl Show for TensorSquare {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        square_json(self)
    }
}

impl Show for TensorTriple {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        triple_json(self)
    }
}

impl Show for Coefficient {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        coefficient_json(self)
    }
}

impl Show for TensorWord {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        word_json(self)
    }
}

impl Show for BaseElement {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        Json::Array(self.iter().map(|(m, c)| json!({ "coeff": c.to_string(), "monomial": m.exponents() })).collect())
    }
}

impl Show for BaseSquare {
    fn text(&self) -> String {
        self.to_string()
    }
    fn json(&self) -> Json {
        Json::Array(
            self.iter()
                .map(|((l, r), c)| json!({ "coeff": c.to_string(), "left": l.exponents(), "right": r.exponents() }))
                .collect(),
        )
    }
}

type BaseTriple = Combination<(Monomial, Monomial, Monomial)>;

impl Show for BaseTriple {
    fn text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|((a, b, c), k)| format!("({k})*({a} ⊗ {b} ⊗ {c})"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
    fn json(&self) -> Json {
        Json::Array(
            self.iter()
                .map(|((a, b, c), k)| json!({ "coeff": k.to_string(), "monomials": [a.exponents(), b.exponents(), c.exponents()] }))
                .collect(),
        )
    }
}

impl Show for String {
    fn text(&self) -> String {
        self.clone()
    }
    fn json(&self) -> Json {
        Json::String(self.clone())
    }
}

pub trait Difference {
    fn difference(&self, other: &Self) -> Self;
}

impl Difference for TensorElement {
    fn difference(&self, other: &Self) -> Self {
        self.sub(other).unwrap_or_else(|_| self.embed_plus().sub(&other.embed_plus()).expect("both in Ш⁺"))
    }
}

impl<K: Ord + Clone> Difference for Combination<K> {
    fn difference(&self, other: &Self) -> Self {
        self.minus(other)
    }
}

impl Difference for Coefficient {
    fn difference(&self, other: &Self) -> Self {
        self - other
    }
}

pub fn item(label: &str, v: &dyn Show) -> Item {
    Item {
        label: label.to_string(),
        text: v.text(),
        json: v.json(),
    }
}

fn note(label: &str, text: String) -> Item {
    item(label, &text)
}

/// `Ok` when `lhs == rhs`; otherwise the inputs, both sides and `lhs - rhs`.
fn equal<T: Show + PartialEq + Difference>(what: &str, inputs: &[Item], lhs: T, rhs: T) -> Check {
    if lhs == rhs {
        return Ok(());
    }
    let mut ev = vec![note("identity", what.to_string())];
    ev.extend_from_slice(inputs);
    ev.push(item("lhs", &lhs));
    ev.push(item("rhs", &rhs));
    ev.push(item("lhs - rhs", &lhs.difference(&rhs)));
    Err(ev)
}

fn holds(what: &str, inputs: &[Item], ok: bool, detail: impl FnOnce() -> Vec<Item>) -> Check {
    if ok {
        return Ok(());
    }
    let mut ev = vec![note("identity", what.to_string())];
    ev.extend_from_slice(inputs);
    ev.extend(detail());
    Err(ev)
}

fn verdict(what: &str, v: LawVerdict) -> Check {
    match v {
        LawVerdict::Holds { .. } => Ok(()),
        LawVerdict::Violated(v) => Err(vec![
            note("identity", what.to_string()),
            item("x", &v.x),
            item("y", &v.y),
            item("lhs", &v.lhs),
            item("rhs", &v.rhs),
            item("lhs - rhs", &v.difference),
        ]),
    }
}

pub struct Ctx<'a> {
    pub alg: &'a TdAlgebra,
    pub shape: Shape,
}

type RandomLaw = fn(&Ctx, &mut ChaCha8Rng) -> Check;

enum Runner {
    Random(RandomLaw),
    /// A deterministic check with its own trial count and printed witnesses.
    Fixed(fn(&Ctx) -> (usize, Check, Vec<String>)),
}

pub struct Law {
    pub name: &'static str,
    pub statement: &'static str,
    runner: Runner,
}

fn lam(ctx: &Ctx, rng: &mut ChaCha8Rng) -> TensorElement {
    random::lambda_element(rng, ctx.shape)
}

fn plus(ctx: &Ctx, rng: &mut ChaCha8Rng) -> TensorElement {
    random::plus_element(rng, ctx.shape)
}

fn shuffle_comm(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (plus(ctx, rng), plus(ctx, rng));
    let a = ctx.alg;
    equal("x # y = y # x", &[item("x", &x), item("y", &y)], a.shuffle(&x, &y), a.shuffle(&y, &x))
}

fn shuffle_assoc(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y, z) = (plus(ctx, rng), plus(ctx, rng), plus(ctx, rng));
    let a = ctx.alg;
    equal(
        "(x # y) # z = x # (y # z)",
        &[item("x", &x), item("y", &y), item("z", &z)],
        a.shuffle(&a.shuffle(&x, &y), &z),
        a.shuffle(&x, &a.shuffle(&y, &z)),
    )
}

fn shuffle_unit(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let one = a.unit_monomial();
    let u = random::word(rng, ctx.shape);
    let v = random::word(rng, ctx.shape);
    let el = |w: &TensorWord| TensorElement::word(Space::Plus, w.clone()).expect("Ш⁺");
    let unit = el(&a.unit_word());
    let (eu, ev) = (el(&u), el(&v));
    let inputs = [item("a", &u), item("b", &v)];

    let expected = el(&u.prepend(one.clone())).add(&eu.scale(a.lambda())).expect("Ш⁺");
    equal("[1] # a = [1, a] + L a", &inputs, a.shuffle(&unit, &eu), expected.clone())?;
    equal("a # [1] = [1, a] + L a", &inputs, a.shuffle(&eu, &unit), expected)?;
    equal("[] # a = a", &inputs, a.shuffle(&TensorElement::scalar(Coefficient::one()), &eu), eu.clone())?;

    let shifted = a.shuffle(&el(&u.prepend(one.clone())), &ev);
    equal("[1, a] # b = a # [1, b]", &inputs, shifted.clone(), a.shuffle(&eu, &el(&v.prepend(one.clone()))))?;
    let inner = a.shuffle(&eu, &ev);
    let prefixed = TensorElement::new(
        Space::Plus,
        inner.terms().iter().map(|(w, c)| (w.prepend(one.clone()), c.clone())).collect(),
    )
    .expect("Ш⁺");
    equal("[1, a] # b = 1 ⊗ (a # b)", &inputs, shifted, prefixed)
}

fn diamond_monoid(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y, z) = (lam(ctx, rng), lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let d = |p: &TensorElement, q: &TensorElement| a.diamond(p, q).expect("Ш_Λ");
    let inputs = [item("x", &x), item("y", &y), item("z", &z)];
    equal("x <> y = y <> x", &inputs, d(&x, &y), d(&y, &x))?;
    equal("(x <> y) <> z = x <> (y <> z)", &inputs, d(&d(&x, &y), &z), d(&x, &d(&y, &z)))?;
    equal("[1] <> x = x", &inputs, d(&a.unit(), &x), x.clone())?;
    equal("x <> [1] = x", &inputs, d(&x, &a.unit()), x.clone())
}

fn td_operator(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let law = LawId::LambdaTd(a.lambda().clone());
    let v = a.check_law(&OperatorId::RightShift, &law, &Ambient::Diamond, &[(x, y)]).expect("Ш_Λ");
    verdict("P(x)P(y) = P(xP(y) + P(x)y + L xy - xP(1)y) for the right shift", v)
}

fn star_assoc(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y, z) = (lam(ctx, rng), lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let op = OperatorId::RightShift;
    let s = |p: &TensorElement, q: &TensorElement| a.star_lambda(p, q, &op).expect("Ш_Λ");
    equal(
        "(x * y) * z = x * (y * z) for the double product",
        &[item("x", &x), item("y", &y), item("z", &z)],
        s(&s(&x, &y), &z),
        s(&x, &s(&y, &z)),
    )
}

fn modified_td(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let op = OperatorId::RightShift;
    let law = LawId::ModifiedTd(a.lambda().clone());
    let v = a.check_law(&op, &law, &Ambient::Star(op.clone()), &[(x, y)]).expect("Ш_Λ");
    verdict("P(x)*P(y) = P(x*P(y) + P(x)*y + L x*y) - x*P(1)*y in the double product", v)
}

fn sample_operator(ctx: &Ctx, rng: &mut ChaCha8Rng) -> OperatorId {
    match rng.gen_range(0..4) {
        0 => OperatorId::RightShift,
        1 => OperatorId::Zero,
        2 => OperatorId::Scale(random::coefficient(rng)),
        _ => OperatorId::Scale(ctx.alg.lambda().clone()),
    }
}

fn sign_duality(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let op = sample_operator(ctx, rng);
    let law = match rng.gen_range(0..4) {
        0 => LawId::LambdaTd(a.lambda().clone()),
        1 => LawId::RotaBaxter(a.lambda().clone()),
        2 => LawId::RotaBaxter(random::coefficient(rng)),
        _ => LawId::Td,
    };
    let samples = [(lam(ctx, rng), lam(ctx, rng))];
    let direct = a.check_law(&op, &law, &Ambient::Diamond, &samples).expect("Ш_Λ").holds();
    let dual_op = op.negated();
    let dual_law = law.map_weight(|w| -w);
    let dual = a.check_law(&dual_op, &dual_law, &Ambient::Diamond, &samples).expect("Ш_Λ").holds();
    holds(
        "P satisfies a law iff -P satisfies it with the weight negated",
        &[item("x", &samples[0].0), item("y", &samples[0].1)],
        direct == dual,
        || {
            vec![
                note("operator", format!("{op} under {law}: {direct}")),
                note("dual", format!("{dual_op} under {dual_law}: {dual}")),
            ]
        },
    )
}

const WEIGHTS: [(i64, i64); 6] = [(0, 1), (1, 1), (-1, 1), (1, 2), (2, 1), (-3, 2)];

fn weight_specializations(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let specialized;
    let a = if rng.gen_bool(0.5) {
        ctx.alg
    } else {
        let (n, d) = WEIGHTS[rng.gen_range(0..WEIGHTS.len())];
        specialized = ctx.alg.with_lambda(Coefficient::constant(Rational::new(n, d)));
        &specialized
    };
    let lam_w = a.lambda().clone();
    let (op, rb) = match rng.gen_range(0..3) {
        0 => (OperatorId::Zero, LawId::RotaBaxter(lam_w.clone())),
        1 => (OperatorId::Scale(lam_w.clone()), LawId::RotaBaxter(Coefficient::zero())),
        _ => (OperatorId::Scale(&lam_w + &lam_w), LawId::RotaBaxter(-&lam_w)),
    };
    let samples = [(lam(ctx, rng), lam(ctx, rng))];
    let td = LawId::LambdaTd(lam_w.clone());
    let is_td = a.check_law(&op, &td, &Ambient::Diamond, &samples).expect("Ш_Λ").holds();
    let is_rb = a.check_law(&op, &rb, &Ambient::Diamond, &samples).expect("Ш_Λ").holds();
    holds(
        "an operator with P(1) in {0, L, 2L} is L-TD iff it is Rota-Baxter of weight L, 0, -L",
        &[item("x", &samples[0].0), item("y", &samples[0].1), item("weight", &lam_w)],
        is_td == is_rb,
        || vec![note("operator", format!("{op}: {td} {is_td}, {rb} {is_rb}"))],
    )
}

fn extension(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let inputs = [item("x", &x), item("y", &y)];
    let free = FreeTarget(a);
    let fi = free.inclusion_images();
    let f = |e: &TensorElement| free_extension(&free, &fi, e).expect("Ш_Λ");
    equal("inclusion extends to the identity", &inputs, f(&x), x.clone())?;
    let xy = a.diamond(&x, &y).expect("Ш_Λ");
    equal("f(x <> y) = f(x) <> f(y) into Ш_Λ", &inputs, f(&xy), a.diamond(&f(&x), &f(&y)).expect("Ш_Λ"))?;
    let px = a.p_shift(&x).expect("Ш_Λ");
    equal("f(P(x)) = P(f(x)) into Ш_Λ", &inputs, f(&px), a.p_shift(&f(&x)).expect("Ш_Λ"))?;

    let base = BaseZeroTarget(a);
    let bi = base.identity_images();
    let g = |e: &TensorElement| free_extension(&base, &bi, e).expect("Ш_Λ");
    equal("g(x <> y) = g(x) g(y) into (A, 0)", &inputs, g(&xy), a.base().mul(&g(&x), &g(&y)))?;
    equal("g(P(x)) = 0 into (A, 0)", &inputs, g(&px), BaseElement::zero())
}

fn base_triple(a: &TdAlgebra, s: &BaseSquare, left: bool) -> BaseTriple {
    let mut out = BaseTriple::zero();
    for ((l, r), c) in s {
        let split = if left { l } else { r };
        for (k, p, q) in a.base().coproduct_basis(split) {
            let key = if left {
                (p, q, r.clone())
            } else {
                (l.clone(), p, q)
            };
            out.add_term(key, c.scale(&k));
        }
    }
    out
}

fn base_square_mul(a: &TdAlgebra, x: &BaseSquare, y: &BaseSquare) -> BaseSquare {
    let mut out = BaseSquare::zero();
    for ((l1, r1), c1) in x {
        for ((l2, r2), c2) in y {
            for (k1, l) in a.base().mul_basis(l1, l2) {
                for (k2, r) in a.base().mul_basis(r1, r2) {
                    out.add_term((l.clone(), r), (c1 * c2).scale(&(&k1 * &k2)));
                }
            }
        }
    }
    out
}

fn base_bialgebra(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let b = a.base();
    let (x, y, z) = (random::base_element(rng, ctx.shape), random::base_element(rng, ctx.shape), random::base_element(rng, ctx.shape));
    let inputs = [item("a", &x), item("b", &y), item("c", &z)];
    let unit = BaseElement::basis(a.unit_monomial());
    equal("ab = ba", &inputs, b.mul(&x, &y), b.mul(&y, &x))?;
    equal("(ab)c = a(bc)", &inputs, b.mul(&b.mul(&x, &y), &z), b.mul(&x, &b.mul(&y, &z)))?;
    equal("1a = a", &inputs, b.mul(&unit, &x), x.clone())?;
    let dx = b.coproduct(&x);
    equal("(id ⊗ Δ)Δ = (Δ ⊗ id)Δ on A", &inputs, base_triple(a, &dx, false), base_triple(a, &dx, true))?;
    equal(
        "Δ(ab) = Δ(a)Δ(b) on A",
        &inputs,
        b.coproduct(&b.mul(&x, &y)),
        base_square_mul(a, &dx, &b.coproduct(&y)),
    )?;
    equal("ε(ab) = ε(a)ε(b) on A", &inputs, b.counit(&b.mul(&x, &y)), &b.counit(&x) * &b.counit(&y))?;
    let (mut left, mut right) = (BaseElement::zero(), BaseElement::zero());
    for ((l, r), c) in &dx {
        left.add_term(r.clone(), c.scale(&b.counit_basis(l)));
        right.add_term(l.clone(), c.scale(&b.counit_basis(r)));
    }
    equal("(ε ⊗ id)Δ = id on A", &inputs, left, x.clone())?;
    equal("(id ⊗ ε)Δ = id on A", &inputs, right, x.clone())?;
    let bound = b.degree(&x);
    let bad = dx.keys().find(|(l, r)| b.degree_basis(l) + b.degree_basis(r) > bound).cloned();
    holds("Δ(A^n) ⊆ Σ A^p ⊗ A^q with p + q ≤ n", &inputs, bad.is_none(), || {
        let (l, r) = bad.expect("failure");
        vec![note("pair", format!("{l} ⊗ {r} in Δ of degree {bound}"))]
    })?;
    let deg = b.degree(&b.mul(&x, &y));
    holds("deg(ab) ≤ deg(a) + deg(b)", &inputs, deg <= b.degree(&x) + b.degree(&y), || {
        vec![note("degree", deg.to_string())]
    })
}

fn coproduct_hom(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let lhs = a.coproduct(&a.diamond(&x, &y).expect("Ш_Λ")).expect("Ш_Λ");
    let rhs = a.square_mul(&a.coproduct(&x).expect("Ш_Λ"), &a.coproduct(&y).expect("Ш_Λ"));
    equal("Δ(x <> y) = Δ(x) • Δ(y)", &[item("x", &x), item("y", &y)], lhs, rhs)
}

fn counit_hom(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (lam(ctx, rng), lam(ctx, rng));
    let a = ctx.alg;
    let inputs = [item("x", &x), item("y", &y)];
    let lhs = a.counit(&a.diamond(&x, &y).expect("Ш_Λ")).expect("Ш_Λ");
    equal("ε(x <> y) = ε(x)ε(y)", &inputs, lhs, &a.counit(&x).expect("Ш_Λ") * &a.counit(&y).expect("Ш_Λ"))?;
    equal("ε([1]) = 1", &inputs, a.counit(&a.unit()).expect("Ш_Λ"), Coefficient::one())
}

fn coassoc(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let x = lam(ctx, rng);
    let (l, r) = ctx.alg.coassociativity_sides(&x).expect("Ш_Λ");
    equal("(id ⊗ Δ)Δ(x) = (Δ ⊗ id)Δ(x)", &[item("x", &x)], l, r)
}

fn left_counit(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let x = lam(ctx, rng);
    let a = ctx.alg;
    equal("(ε ⊗ id)Δ(x) = x", &[item("x", &x)], a.counit_left(&a.coproduct(&x).expect("Ш_Λ")), x.clone())
}

fn right_counit_fails(ctx: &Ctx) -> (usize, Check, Vec<String>) {
    let a = ctx.alg;
    let mut witnesses = Vec::new();
    for i in 0..a.vars() {
        let x = a.word(TensorWord::letter(a.generator(i))).expect("generator");
        let px = a.p_shift(&x).expect("Ш_Λ");
        let value = a.counit_right(&a.coproduct(&px).expect("Ш_Λ"));
        if !value.is_zero() || px.is_zero() {
            let ev = vec![
                note("identity", "(id ⊗ ε)Δ(P(x)) = 0 while P(x) ≠ 0".to_string()),
                item("x", &x),
                item("P(x)", &px),
                item("(id ⊗ ε)Δ(P(x))", &value),
            ];
            return (i + 1, Err(ev), witnesses);
        }
        witnesses.push(format!("(id ⊗ ε)Δ(P({x})) = {value}, but P({x}) = {px}"));
    }
    (a.vars(), Ok(()), witnesses)
}

fn square_td(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let (x, y) = (random::square(rng, ctx.shape), random::square(rng, ctx.shape));
    let (lhs, rhs) = ctx.alg.square_td_sides(&x, &y);
    equal("id ⊗ P is an L-TD operator on (Ш_Λ ⊗ Ш_Λ, •)", &[item("x", &x), item("y", &y)], lhs, rhs)
}

fn cocycle(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let x = lam(ctx, rng);
    let s = random::square(rng, ctx.shape);
    let inputs = [item("x", &x), item("s", &s)];
    let lhs = a.coproduct(&a.p_shift(&x).expect("Ш_Λ")).expect("Ш_Λ");
    equal("Δ(P(x)) = (id ⊗ P)Δ(x)", &inputs, lhs, a.square_op(&a.coproduct(&x).expect("Ш_Λ")))?;
    equal(
        "(id ⊗ Δ)(id ⊗ P)(s) = (id ⊗ id ⊗ P)(id ⊗ Δ)(s)",
        &inputs,
        a.id_tensor_coproduct(&a.square_op(&s)),
        a.triple_op_last(&a.id_tensor_coproduct(&s)),
    )?;
    equal(
        "(Δ ⊗ id)(id ⊗ P)(s) = (id ⊗ id ⊗ P)(Δ ⊗ id)(s)",
        &inputs,
        a.coproduct_tensor_id(&a.square_op(&s)),
        a.triple_op_last(&a.coproduct_tensor_id(&s)),
    )
}

fn filtration(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let deg = |w: &TensorWord| a.word_degree(w).expect("non-empty");
    let p1 = a.unit_word().prepend(a.unit_monomial());
    holds("deg(P(1)) = 1", &[], deg(&p1) == 1, Vec::new)?;

    let (u, v) = (random::word(rng, ctx.shape), random::word(rng, ctx.shape));
    let inputs = [item("u", &u), item("v", &v)];
    let bound = deg(&u) + deg(&v);
    let product = a.diamond_words(&u, &v);
    let high = product.keys().find(|w| deg(w) > bound).cloned();
    holds("Λ^p <> Λ^q ⊆ Λ^(p+q)", &inputs, high.is_none(), || {
        let w = high.expect("failure");
        vec![
            item("u <> v", &TensorElement::new(Space::Lambda, product.clone()).expect("Ш_Λ")),
            note("term", format!("{w} of degree {} > {bound}", deg(&w))),
        ]
    })?;
    let d = a.coproduct_word(&u);
    let k = deg(&u);
    let bad = d.keys().find(|(l, r)| deg(l) + deg(r) > k).cloned();
    holds("every pair of Δ(u) has deg(left) + deg(right) ≤ deg(u)", &inputs, bad.is_none(), || {
        let (l, r) = bad.expect("failure");
        vec![item("Δ(u)", &*d), note("pair", format!("{l} ⊗ {r}: {} + {} > {k}", deg(&l), deg(&r)))]
    })
}

fn antipode_law(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let x = lam(ctx, rng);
    let inputs = [item("x", &x)];
    equal("S([1]) = [1]", &inputs, a.antipode(&a.unit()).expect("Ш_Λ"), a.unit())?;
    let mut s = LinearMapTable::new(tdhopf_core::DefaultRule::Reject);
    for (_, v) in a.coproduct(&x).expect("Ш_Λ").keys() {
        match a.antipode_word(v) {
            Ok(value) => s.assign(v.clone(), (*value).clone()),
            Err(e) => return holds("antipode recursion terminates", &inputs, false, || vec![note("error", e.to_string())]),
        }
    }
    let id = LinearMapTable::identity();
    let lhs = a.convolution(&id, &s, &x).expect("table covers Δ(x)");
    let rhs = a.unit().scale(&a.counit(&x).expect("Ш_Λ"));
    equal("(id ∗ S)(x) = ε(x)[1]", &inputs, lhs, rhs)
}

fn counit_split(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Check {
    let a = ctx.alg;
    let x = lam(ctx, rng);
    let c = random::coefficient(rng);
    let inputs = [item("x", &x), item("c", &c)];
    let (eps, k) = a.counit_split(&x).expect("Ш_Λ");
    equal("ε(x)[1] + kernel = x", &inputs, a.unit().scale(&eps).add(&k).expect("Ш_Λ"), x.clone())?;
    equal("ε(kernel) = 0", &inputs, a.counit(&k).expect("Ш_Λ"), Coefficient::zero())?;
    let (eps2, k2) = a.counit_split(&k.add(&a.unit().scale(&c)).expect("Ш_Λ")).expect("Ш_Λ");
    equal("split(kernel + c[1]) has scalar part c", &inputs, eps2, c.clone())?;
    equal("split(kernel + c[1]) has kernel part kernel", &inputs, k2, k.clone())?;
    let (dk, dx) = (a.element_degree(&k).expect("Ш_Λ"), a.element_degree(&x).expect("Ш_Λ"));
    holds("kernel stays in the filtration level of x", &inputs, dk <= dx, || {
        vec![note("degrees", format!("{dk} > {dx}"))]
    })
}

pub const LAWS: &[Law] = &[
    Law { name: "shuffle-comm", statement: "⊔ is commutative on Ш⁺", runner: Runner::Random(shuffle_comm) },
    Law { name: "shuffle-assoc", statement: "⊔ is associative on Ш⁺", runner: Runner::Random(shuffle_assoc) },
    Law { name: "shuffle-unit", statement: "unit-letter rules for ⊔", runner: Runner::Random(shuffle_unit) },
    Law { name: "diamond-monoid", statement: "⋄ is a commutative monoid with unit [1]", runner: Runner::Random(diamond_monoid) },
    Law { name: "td-operator", statement: "P is an L-TD operator on (Ш_Λ, ⋄)", runner: Runner::Random(td_operator) },
    Law { name: "star-assoc", statement: "∗ is associative", runner: Runner::Random(star_assoc) },
    Law { name: "modified-td", statement: "P is L-modified TD on (Ш_Λ, ∗)", runner: Runner::Random(modified_td) },
    Law { name: "sign-duality", statement: "P is L-TD iff -P is (-L)-TD", runner: Runner::Random(sign_duality) },
    Law { name: "weight-specializations", statement: "P(1) ∈ {0, L, 2L} turns L-TD into Rota-Baxter", runner: Runner::Random(weight_specializations) },
    Law { name: "extension", statement: "extensions of generator maps are L-TD homomorphisms", runner: Runner::Random(extension) },
    Law { name: "base-bialgebra", statement: "A is a filtered commutative bialgebra", runner: Runner::Random(base_bialgebra) },
    Law { name: "coproduct-hom", statement: "Δ is multiplicative", runner: Runner::Random(coproduct_hom) },
    Law { name: "counit-hom", statement: "ε is multiplicative", runner: Runner::Random(counit_hom) },
    Law { name: "coassoc", statement: "Δ is coassociative", runner: Runner::Random(coassoc) },
    Law { name: "left-counit", statement: "(ε ⊗ id)Δ = id", runner: Runner::Random(left_counit) },
    Law { name: "right-counit-fails", statement: "(id ⊗ ε)Δ ≠ id, witnessed on P(x)", runner: Runner::Fixed(right_counit_fails) },
    Law { name: "square-td", statement: "id ⊗ P is L-TD on the tensor square", runner: Runner::Random(square_td) },
    Law { name: "cocycle", statement: "Δ P = (id ⊗ P)Δ and its interchange rules", runner: Runner::Random(cocycle) },
    Law { name: "filtration", statement: "⋄ and Δ respect the degree filtration", runner: Runner::Random(filtration) },
    Law { name: "antipode", statement: "id ∗ S = ε·1", runner: Runner::Random(antipode_law) },
    Law { name: "counit-split", statement: "x = ε(x)1 + (x - ε(x)1) uniquely", runner: Runner::Random(counit_split) },
];

pub fn law(name: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.name == name)
}

pub fn suite_names() -> Vec<&'static str> {
    std::iter::once("all").chain(LAWS.iter().map(|l| l.name)).collect()
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub trials: usize,
    pub violation: Option<(usize, Evidence)>,
    pub witnesses: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn run_law(law: &Law, ctx: &Ctx, seed: u64, trials: usize) -> LawReport {
    let (trials, violation, witnesses) = match &law.runner {
        Runner::Random(f) => {
            let outcomes: Vec<Check> = (0..trials)
                .into_par_iter()
                .map(|i| f(ctx, &mut trial_rng(seed, law.name, i)))
                .collect();
            let first = outcomes.into_iter().enumerate().find_map(|(i, c)| c.err().map(|e| (i, e)));
            (trials, first, Vec::new())
        }
        Runner::Fixed(f) => {
            let (n, check, witnesses) = f(ctx);
            (n, check.err().map(|e| (n - 1, e)), witnesses)
        }
    };
    LawReport {
        name: law.name,
        statement: law.statement,
        trials,
        violation,
        witnesses,
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub shape: Shape,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub weight: Coefficient,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn violations(&self) -> usize {
        self.laws.iter().filter(|l| !l.passed()).count()
    }

    pub fn text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "laws: suite {}, seed {}, trials {}, max degree {}, max length {}, vars {}, weight {}\n",
            c.suite, c.seed, c.trials, c.shape.max_degree, c.shape.max_length, c.shape.vars, self.weight
        );
        let width = self.laws.iter().map(|l| l.name.len()).max().unwrap_or(0);
        for l in &self.laws {
            let status = if l.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  {status}  {:<width$}  {:>5} trials  {}\n", l.name, l.trials, l.statement));
            for w in &l.witnesses {
                out.push_str(&format!("        witness: {w}\n"));
            }
            if let Some((trial, ev)) = &l.violation {
                out.push_str(&format!("        first violation at trial {trial}\n"));
                for it in ev {
                    out.push_str(&format!("        {} = {}\n", it.label, it.text));
                }
            }
        }
        out.push_str(&format!("result: {} laws, {} violations\n", self.laws.len(), self.violations()));
        out
    }

    pub fn json(&self) -> Json {
        let c = &self.config;
        json!({
            "suite": c.suite,
            "seed": c.seed,
            "trials": c.trials,
            "max_degree": c.shape.max_degree,
            "max_length": c.shape.max_length,
            "vars": c.shape.vars,
            "weight": self.weight.to_string(),
            "laws": self.laws.iter().map(|l| json!({
                "name": l.name,
                "statement": l.statement,
                "trials": l.trials,
                "passed": l.passed(),
                "witnesses": l.witnesses,
                "violation": l.violation.as_ref().map(|(trial, ev)| json!({
                    "trial": trial,
                    "evidence": ev.iter().map(|it| json!({ "label": it.label, "text": it.text, "value": it.json })).collect::<Vec<_>>(),
                })),
            })).collect::<Vec<_>>(),
            "violations": self.violations(),
        })
    }
}

/// Runs `config.suite` (a law name or `all`). `None` for an unknown suite.
/// The variable count always comes from `alg`.
pub fn run_suite(alg: &TdAlgebra, mut config: SuiteConfig) -> Option<SuiteReport> {
    config.shape.vars = alg.vars();
    let selected: Vec<&Law> = if config.suite == "all" {
        LAWS.iter().collect()
    } else {
        vec![law(&config.suite)?]
    };
    let ctx = Ctx {
        alg,
        shape: config.shape,
    };
    let laws = selected.into_iter().map(|l| run_law(l, &ctx, config.seed, config.trials)).collect();
    Some(SuiteReport {
        config,
        weight: alg.lambda().clone(),
        laws,
    })
}
