use std::collections::BTreeSet;
use std::time::Instant;

use chain_core::{Chain, Monoid};
use decompose::{Branch, Step};

use crate::laws::{candidates, law_seed};
use crate::report::CellStat;
use crate::{LawError, Report, SampleStream, Violation};

pub const TABLE_LAWS: [&str; 4] = ["table1", "table2", "table3", "table4"];

/// Candidate draws used to fill the element pools.
const POOL: usize = 4000;

/// Which pool a table row or column draws from, and how the drawn element is
/// turned into the operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `v ∈ X_{τ<u}`.
    V,
    /// `⊥_[v]`.
    BotV,
    /// `⊤_[v]`.
    TopV,
    /// `X_{τ≥u} \ X^T`.
    Z,
    /// `x_↓` for `x` a pseudo top-extremal.
    XDown,
    /// Pseudo top-extremal.
    X,
    /// `a_↓ = a ∈ X_{τ≥u} \ X^{T_c}`.
    A,
    /// Anything in `X_{τ≥u}`.
    Y,
}

impl Kind {
    fn label(self, col: bool) -> &'static str {
        match (self, col) {
            (Kind::V, false) => "v",
            (Kind::V, true) => "w",
            (Kind::BotV, false) => "bot[v]",
            (Kind::BotV, true) => "bot[w]",
            (Kind::TopV, false) => "top[v]",
            (Kind::TopV, true) => "top[w]",
            (Kind::Z, false) => "z",
            (Kind::Z, true) => "s",
            (Kind::XDown, false) => "x_dn",
            (Kind::XDown, true) => "y_dn",
            (Kind::X, false) => "x",
            (Kind::X, true) => "y",
            (Kind::A, _) => "a",
            (Kind::Y, _) => "y",
        }
    }
}

/// A drawn operand together with the element it was derived from.
struct Pick<E> {
    base: E,
    elem: E,
}

/// What a cell claims about the product: an exact value, a membership, or
/// both.
/// Split cells also name the side of the split that applied.
struct Expect<E> {
    value: Option<E>,
    claim: Option<(&'static str, bool)>,
    side: Option<&'static str>,
}

fn eq<E>(e: E) -> Expect<E> {
    Expect { value: Some(e), claim: None, side: None }
}

fn member<E>(what: &'static str, ok: bool) -> Expect<E> {
    Expect { value: None, claim: Some((what, ok)), side: None }
}

fn eq_and<E>(e: E, what: &'static str, ok: bool) -> Expect<E> {
    Expect { value: Some(e), claim: Some((what, ok)), side: None }
}

impl<E> Expect<E> {
    fn on(self, left: bool) -> Expect<E> {
        Expect { side: Some(if left { "left" } else { "right" }), ..self }
    }
}

type Rule<C> = fn(&Step<&C>, &Pick<Elem<C>>, &Pick<Elem<C>>, &Elem<C>) -> Expect<Elem<C>>;

type Elem<C> = <C as Monoid>::Elem;

struct Cell<C: Chain> {
    row: Kind,
    col: Kind,
    rule: Rule<C>,
}

impl<C: Chain> Cell<C> {
    fn name(&self) -> String {
        format!("{}*{}", self.row.label(false), self.col.label(true))
    }
}

fn cell<C: Chain>(row: Kind, col: Kind, rule: Rule<C>) -> Cell<C> {
    Cell { row, col, rule }
}

fn vw<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> C::Elem {
    s.alg().mul(&r.base, &c.base)
}

/// `⊥_[v∗w]` and `⊤_[v∗w]` from the underlying components.
fn bot_vw<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    eq(s.bot_of(&vw(s, r, c)))
}

fn top_vw<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    eq(s.top_of(&vw(s, r, c)))
}

/// The product of the underlying elements.
fn base_prod<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    eq(vw(s, r, c))
}

/// `(base∗base)_↓`.
fn base_down<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    eq(s.alg().x_down(&vw(s, r, c)))
}

fn plain<C: Chain>(s: &Step<&C>, p: &C::Elem) -> Expect<C::Elem> {
    member("product in X_{tau>=u} minus XT", s.in_plain(p))
}

fn in_top_ps<C: Chain>(s: &Step<&C>, e: C::Elem) -> Expect<C::Elem> {
    let ok = s.is_top_ps(&e);
    eq_and(e, "in TopPs", ok)
}

fn prod_ps<C: Chain>(s: &Step<&C>, p: &C::Elem) -> Expect<C::Elem> {
    member("in TopPs", s.is_top_ps(p))
}

/// Whether the product of two pseudo top-extremals takes the left formula:
/// `x∗y > (x∗y)_↓ ∈ X_{τ≥u}`.
fn split_left<C: Chain>(s: &Step<&C>, p: &C::Elem) -> bool {
    let d = s.alg().x_down(p);
    s.alg().compare(&d, p).is_lt() && !s.below(&d)
}

/// `(x∗y)_↓ | ⊥_[r]` on the underlying pseudo top-extremals.
fn split_bot<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    let p = vw(s, r, c);
    let left = split_left(s, &p);
    if left {
        eq(s.alg().x_down(&p)).on(left)
    } else {
        eq(s.bot_of(&p)).on(left)
    }
}

fn split_top<C: Chain>(s: &Step<&C>, r: &Pick<C::Elem>, c: &Pick<C::Elem>) -> Expect<C::Elem> {
    let p = vw(s, r, c);
    let left = split_left(s, &p);
    let ok = if left { s.is_top_ps(&p) } else { s.is_top_c(&p) };
    eq_and(p, if left { "in TopPs" } else { "in TopC" }, ok).on(left)
}

fn table1<C: Chain>() -> Vec<Cell<C>> {
    use Kind::*;
    vec![
        cell(BotV, V, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, TopV, |s, r, c, _| bot_vw(s, r, c)),
        cell(V, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(V, V, |s, r, c, _| base_prod(s, r, c)),
        cell(V, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(TopV, V, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, Y, |s, r, c, _| base_prod(s, r, c)),
        cell(A, BotV, |s, r, c, _| base_prod(s, r, c)),
        cell(A, V, |s, r, c, _| base_prod(s, r, c)),
        cell(A, TopV, |s, r, c, _| base_prod(s, r, c)),
    ]
}

fn table2<C: Chain>() -> Vec<Cell<C>> {
    use Kind::*;
    vec![
        cell(BotV, V, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, TopV, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, Z, |s, r, c, _| base_prod(s, r, c)),
        cell(BotV, X, |s, r, c, _| {
            let p = vw(s, r, c);
            let d = s.alg().x_down(&p);
            let ok = s.is_top_ps(&p) && s.alg().compare(&d, &p).is_lt();
            eq_and(d, "v*y in TopPs above its cover", ok)
        }),
        cell(V, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(V, V, |s, r, c, _| base_prod(s, r, c)),
        cell(V, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(V, Z, |s, _, _, p| plain(s, p)),
        cell(V, X, |s, _, _, p| prod_ps(s, p)),
        cell(TopV, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(TopV, V, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, Z, |s, _, _, p| plain(s, p)),
        cell(TopV, X, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, BotV, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, V, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, TopV, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, Z, |s, _, _, p| plain(s, p)),
        cell(Z, XDown, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, X, |s, r, c, _| base_prod(s, r, c)),
        cell(XDown, Z, |s, r, c, _| base_prod(s, r, c)),
        cell(X, BotV, |s, r, c, _| base_down(s, r, c)),
        cell(X, V, |s, _, _, p| prod_ps(s, p)),
        cell(X, TopV, |s, r, c, _| base_prod(s, r, c)),
        cell(X, Z, |s, _, _, p| plain(s, p)),
    ]
}

fn table3<C: Chain>() -> Vec<Cell<C>> {
    use Kind::*;
    vec![
        cell(BotV, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, V, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, TopV, |s, r, c, _| bot_vw(s, r, c)),
        cell(BotV, Z, |s, r, c, _| base_prod(s, r, c)),
        cell(BotV, XDown, |s, r, c, _| base_down(s, r, c)),
        cell(BotV, X, |s, r, c, _| base_down(s, r, c)),
        cell(V, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(V, V, |s, r, c, _| base_prod(s, r, c)),
        cell(V, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(V, Z, |s, _, _, p| plain(s, p)),
        cell(V, XDown, |s, r, c, _| base_down(s, r, c)),
        cell(V, X, |s, _, _, p| prod_ps(s, p)),
        cell(TopV, BotV, |s, r, c, _| bot_vw(s, r, c)),
        cell(TopV, V, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, Z, |s, _, _, p| plain(s, p)),
        cell(TopV, XDown, |s, r, c, _| base_down(s, r, c)),
        cell(TopV, X, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, BotV, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, V, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, TopV, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, Z, |s, _, _, p| plain(s, p)),
        cell(Z, XDown, |s, r, c, _| base_prod(s, r, c)),
        cell(Z, X, |s, r, c, _| base_prod(s, r, c)),
        cell(XDown, BotV, |s, r, c, _| base_down(s, r, c)),
        cell(XDown, V, |s, r, c, _| base_down(s, r, c)),
        cell(XDown, TopV, |s, r, c, _| base_down(s, r, c)),
        cell(XDown, Z, |s, r, c, _| base_prod(s, r, c)),
        cell(XDown, XDown, |s, r, c, _| split_bot(s, r, c)),
        cell(XDown, X, |s, r, c, _| split_bot(s, r, c)),
        cell(X, BotV, |s, r, c, _| base_down(s, r, c)),
        cell(X, V, |s, _, _, p| prod_ps(s, p)),
        cell(X, TopV, |s, r, c, _| base_prod(s, r, c)),
        cell(X, Z, |s, _, _, p| plain(s, p)),
        cell(X, XDown, |s, r, c, _| split_bot(s, r, c)),
        cell(X, X, |s, r, c, _| split_top(s, r, c)),
    ]
}

fn table4<C: Chain>() -> Vec<Cell<C>> {
    use Kind::*;
    vec![
        cell(TopV, TopV, |s, r, c, _| top_vw(s, r, c)),
        cell(TopV, X, |s, r, c, _| in_top_ps(s, vw(s, r, c))),
        cell(X, TopV, |s, r, c, _| in_top_ps(s, vw(s, r, c))),
        cell(X, X, |s, _, _, p| {
            let left = split_left(s, p);
            if left {
                member("x*y in TopPs", s.is_top_ps(p)).on(left)
            } else {
                member("x*y in TopC", s.is_top_c(p)).on(left)
            }
        }),
    ]
}

struct Pools<E> {
    v: Vec<E>,
    z: Vec<E>,
    x: Vec<E>,
    a: Vec<E>,
    y: Vec<E>,
}

impl<E: Clone + Ord> Pools<E> {
    fn new<C: Chain<Elem = E>>(s: &Step<&C>, st: &mut SampleStream, n: usize) -> Pools<E> {
        let alg = s.alg();
        let mut p = Pools { v: vec![], z: vec![], x: vec![], a: vec![], y: vec![] };
        let all: BTreeSet<E> = candidates(*alg, st, n).into_iter().collect();
        for e in all {
            if s.below(&e) {
                p.v.push(e);
                continue;
            }
            if s.in_plain(&e) {
                p.z.push(e.clone());
            }
            if s.is_top_ps(&e) {
                p.x.push(e.clone());
            }
            if !s.is_top_c(&e) && alg.x_down(&e) == e {
                p.a.push(e.clone());
            }
            p.y.push(e);
        }
        p
    }

    fn of(&self, k: Kind) -> &[E] {
        match k {
            Kind::V | Kind::BotV | Kind::TopV => &self.v,
            Kind::Z => &self.z,
            Kind::X | Kind::XDown => &self.x,
            Kind::A => &self.a,
            Kind::Y => &self.y,
        }
    }
}

fn draw<C: Chain>(s: &Step<&C>, k: Kind, pools: &Pools<C::Elem>, st: &mut SampleStream) -> Pick<C::Elem> {
    let base = st.pick(pools.of(k)).clone();
    let elem = match k {
        Kind::BotV => s.bot_of(&base),
        Kind::TopV => s.top_of(&base),
        Kind::XDown => s.alg().x_down(&base),
        _ => base.clone(),
    };
    Pick { base, elem }
}

/// Instantiate every populated cell of product table `n` (1 to 4) `budget`
/// times and compare the table entry with the direct product. Cells whose
/// element kinds do not occur in the algebra are reported as vacuous. Cells
/// with a two-sided formula get `|left` and `|right` sub-cells counting
/// which side applied.
pub fn check_table<C: Chain>(a: &C, n: u8, budget: usize, seed: u64) -> Result<Report, LawError> {
    let id = *TABLE_LAWS.get((n as usize).wrapping_sub(1)).ok_or_else(|| LawError::UnknownLaw(format!("table{n}")))?;
    let s = Step::new(a)?;
    match n {
        3 => s.require(Branch::Idem)?,
        4 => s.require(Branch::NonIdem)?,
        _ => {}
    }
    let cells = match n {
        1 => table1::<C>(),
        2 => table2::<C>(),
        3 => table3::<C>(),
        _ => table4::<C>(),
    };
    let start = Instant::now();
    let mut st = SampleStream::new(law_seed(seed, id));
    let pools = Pools::new(&s, &mut st, POOL.max(budget));
    let mut r = Report::new(id);
    for c in &cells {
        let name = c.name();
        let mut stat = CellStat { name: name.clone(), count: 0, failures: 0 };
        let mut sides: Vec<CellStat> = Vec::new();
        if pools.of(c.row).is_empty() || pools.of(c.col).is_empty() {
            r.vacuous.push(name);
            r.cells.push(stat);
            continue;
        }
        for _ in 0..budget {
            let row = draw(&s, c.row, &pools, &mut st);
            let col = draw(&s, c.col, &pools, &mut st);
            let prod = a.mul(&row.elem, &col.elem);
            let want = (c.rule)(&s, &row, &col, &prod);
            stat.count += 1;
            r.sample();
            let mut bad = None;
            if let Some(v) = &want.value {
                if *v != prod {
                    bad = Some(Violation::new(&name, &[&row.elem, &col.elem], &prod, v));
                }
            }
            if let Some((what, false)) = want.claim {
                bad.get_or_insert_with(|| Violation::new(&name, &[&row.elem, &col.elem], &prod, what));
            }
            let side = want.side.map(|sd| {
                let full = format!("{name}|{sd}");
                match sides.iter().position(|c| c.name == full) {
                    Some(i) => i,
                    None => {
                        sides.push(CellStat { name: full, count: 0, failures: 0 });
                        sides.len() - 1
                    }
                }
            });
            if let Some(i) = side {
                sides[i].count += 1;
            }
            if let Some(v) = bad {
                stat.failures += 1;
                if let Some(i) = side {
                    sides[i].failures += 1;
                }
                r.fail(v);
            }
        }
        let split = !sides.is_empty();
        r.cells.push(stat);
        if split {
            for sd in ["left", "right"] {
                let full = format!("{name}|{sd}");
                let st = sides.iter().find(|c| c.name == full).cloned().unwrap_or(CellStat {
                    name: full,
                    count: 0,
                    failures: 0,
                });
                if st.count == 0 {
                    r.vacuous.push(st.name.clone());
                }
                r.cells.push(st);
            }
        }
    }
    r.elapsed = start.elapsed();
    Ok(r)
}
