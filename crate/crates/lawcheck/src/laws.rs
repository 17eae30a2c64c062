use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::time::Instant;

use chain_core::{Bounds, Chain};
use decompose::{Branch, Step};

use crate::tables::{check_table, TABLE_LAWS};
use crate::{LawError, Report, SampleStream, Violation};

pub const FLE_LAWS: [&str; 6] = ["commutativity", "associativity", "unit", "adjointness", "involution", "oddness"];

pub const NAMED_LAWS: [&str; 23] = [
    "eq2.2",
    "eq2.3",
    "prop2.3.1",
    "prop2.3.2",
    "prop2.3.3",
    "prop2.3.4",
    "prop2.3.5",
    "prop2.3.6",
    "prop4.3",
    "prop5.3",
    "lemma5.4",
    "thm2.4",
    "prop7.2.eqs",
    "prop8.2.1",
    "prop8.2.2",
    "prop8.2.3",
    "prop8.2.4",
    "prop8.2.5",
    "prop8.2.6",
    "prop9.2",
    "prop10.1.3",
    "remark11.4",
    "duality",
];

/// Every law id, in report order.
pub const ALL_LAWS: [&str; 33] = [
    "commutativity",
    "associativity",
    "unit",
    "adjointness",
    "involution",
    "oddness",
    "eq2.2",
    "eq2.3",
    "prop2.3.1",
    "prop2.3.2",
    "prop2.3.3",
    "prop2.3.4",
    "prop2.3.5",
    "prop2.3.6",
    "prop4.3",
    "prop5.3",
    "lemma5.4",
    "thm2.4",
    "prop7.2.eqs",
    "prop8.2.1",
    "prop8.2.2",
    "prop8.2.3",
    "prop8.2.4",
    "prop8.2.5",
    "prop8.2.6",
    "prop9.2",
    "prop10.1.3",
    "remark11.4",
    "duality",
    "table1",
    "table2",
    "table3",
    "table4",
];

/// Random elements probed around each residual in the adjointness check.
const PROBES: usize = 8;

/// Per-law stream seed, so that adding a law leaves the others unchanged.
pub(crate) fn law_seed(seed: u64, id: &str) -> u64 {
    id.bytes().fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

pub(crate) fn timed(id: &str, f: impl FnOnce(&mut Report)) -> Report {
    let start = Instant::now();
    let mut r = Report::new(id);
    f(&mut r);
    r.elapsed = start.elapsed();
    r
}

/// Run `f` until `budget` applicable instances were seen; `f` returns whether
/// its draw was applicable.
pub(crate) fn each(r: &mut Report, budget: usize, mut f: impl FnMut(&mut Report) -> bool) {
    let mut tries = 0;
    while r.samples < budget && tries < budget.saturating_mul(20) {
        tries += 1;
        if f(r) {
            r.sample();
        }
    }
}

pub(crate) fn same<E: PartialEq + Display>(r: &mut Report, ctx: &str, inputs: &[&dyn Display], lhs: E, rhs: E) {
    if lhs != rhs {
        r.fail(Violation::new(ctx, inputs, lhs, rhs));
    }
}

pub(crate) fn holds(r: &mut Report, ctx: &str, inputs: &[&dyn Display], ok: bool, claim: &str) {
    if !ok {
        r.fail(Violation::new(ctx, inputs, "false", claim));
    }
}

/// Raw samples plus products of sampled pairs and their complements.
pub(crate) fn candidates<C: Chain>(a: &C, st: &mut SampleStream, n: usize) -> Vec<C::Elem> {
    let raw = st.take(a, n);
    let mut out = raw.clone();
    for _ in 0..n / 2 {
        let p = a.mul(st.pick(&raw), st.pick(&raw));
        out.push(a.comp(&p));
        out.push(p);
    }
    out
}

/// The six FLe-chain laws, one report each.
pub fn check_fle_laws<C: Chain>(a: &C, budget: usize, seed: u64) -> Vec<Report> {
    FLE_LAWS.iter().map(|id| fle_law(a, id, budget, seed).expect("listed law")).collect()
}

/// Any law of [`ALL_LAWS`].
pub fn check_law<C: Chain>(a: &C, id: &str, budget: usize, seed: u64) -> Result<Report, LawError> {
    if let Some(r) = fle_law(a, id, budget, seed) {
        return Ok(r);
    }
    if let Some(n) = TABLE_LAWS.iter().position(|t| *t == id) {
        return check_table(a, n as u8 + 1, budget, seed);
    }
    check_named(a, id, budget, seed)
}

fn fle_law<C: Chain>(a: &C, id: &str, budget: usize, seed: u64) -> Option<Report> {
    let mut st = SampleStream::new(law_seed(seed, id));
    let t = a.unit();
    let r = match id {
        "commutativity" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, y) = (st.next(a), st.next(a));
                same(r, id, &[&x, &y], a.mul(&x, &y), a.mul(&y, &x));
                true
            })
        }),
        "associativity" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, y, z) = (st.next(a), st.next(a), st.next(a));
                same(r, id, &[&x, &y, &z], a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
                true
            })
        }),
        "unit" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                same(r, "t*x", &[&x], a.mul(&t, &x), x.clone());
                same(r, "x*t", &[&x], a.mul(&x, &t), x.clone());
                true
            })
        }),
        "adjointness" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, z) = (st.next(a), st.next(a));
                let res = a.res(&x, &z);
                let mut probes = vec![a.x_up(&res), a.x_down(&res), res.clone()];
                probes.extend(st.take(a, PROBES));
                for v in &probes {
                    let lhs = a.le(&a.mul(&x, v), &z);
                    let rhs = a.le(v, &res);
                    if lhs != rhs {
                        r.fail(Violation::new(
                            id,
                            &[&x, &z, v],
                            format!("x*v<=z is {lhs}"),
                            format!("v<=res(x,z) is {rhs}"),
                        ));
                    }
                }
                true
            })
        }),
        "involution" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                same(r, id, &[&x], a.comp(&a.comp(&x)), x.clone());
                true
            })
        }),
        "oddness" => timed(id, |r| {
            r.sample();
            same(r, id, &[&t], a.comp(&t), t.clone());
            same(r, "f=t", &[&t], a.fconst(), t.clone());
        }),
        _ => return None,
    };
    Some(r)
}

/// The named laws; see [`NAMED_LAWS`].
pub fn check_named<C: Chain>(a: &C, id: &str, budget: usize, seed: u64) -> Result<Report, LawError> {
    let mut st = SampleStream::new(law_seed(seed, id));
    let t = a.unit();
    let r = match id {
        "eq2.2" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, y) = (st.next(a), st.next(a));
                let (l, rr) = (a.mul(&x, &y), a.comp(&a.mul(&a.comp(&x), &a.comp(&y))));
                let ok = a.le(&l, &rr);
                holds(r, id, &[&x, &y], ok, "x*y <= not(not x * not y)");
                true
            })
        }),
        "eq2.3" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, mut y) = (st.next(a), st.next(a));
                let mut y1 = if st.one_in(3) { a.x_up(&y) } else { st.next(a) };
                if a.compare(&y1, &y).is_lt() {
                    std::mem::swap(&mut y, &mut y1);
                }
                if y == y1 {
                    return false;
                }
                let ok = a.le(&a.comp(&a.mul(&a.comp(&x), &a.comp(&y))), &a.mul(&x, &y1));
                holds(r, id, &[&x, &y, &y1], ok, "not(not x * not y) <= x*y1");
                true
            })
        }),
        "prop2.3.1" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                same(r, id, &[&x], a.tau(&x), a.tau(&a.comp(&x)));
                true
            })
        }),
        "prop2.3.2" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                let tx = a.tau(&x);
                same(r, id, &[&x], a.tau(&tx), tx.clone());
                true
            })
        }),
        "prop2.3.3" => timed(id, |r| {
            each(r, budget, |r| {
                let (x, y) = (st.next(a), st.next(a));
                let ok = a.le(&a.tau(&x), &a.tau(&a.mul(&x, &y)));
                holds(r, id, &[&x, &y], ok, "tau(x) <= tau(x*y)");
                true
            })
        }),
        "prop2.3.4" => timed(id, |r| {
            each(r, budget, |r| {
                let s = st.next(a);
                let x = if st.one_in(2) { a.tau(&s) } else { s };
                if a.compare(&x, &t).is_lt() {
                    return false;
                }
                let idem = a.mul(&x, &x) == x;
                let fixed = a.tau(&x) == x;
                if idem != fixed {
                    r.fail(Violation::new(id, &[&x], format!("idempotent={idem}"), format!("tau(x)=x is {fixed}")));
                }
                true
            })
        }),
        "prop2.3.5" => timed(id, |r| {
            let idems: BTreeSet<C::Elem> = a.positive_idempotents().into_iter().collect();
            for e in &idems {
                same(r, "tau(e)=e", &[e], a.tau(e), e.clone());
                holds(r, "e*e=e", &[e], a.mul(e, e) == *e && a.le(&t, e), "e is a positive idempotent");
            }
            each(r, budget, |r| {
                let x = st.next(a);
                let tx = a.tau(&x);
                holds(r, id, &[&x], idems.contains(&tx), "tau(x) is a listed positive idempotent");
                true
            })
        }),
        "prop2.3.6" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                if a.compare(&x, &t).is_lt() {
                    return false;
                }
                holds(r, id, &[&x], a.le(&a.tau(&x), &x), "tau(x) <= x");
                true
            })
        }),
        "prop4.3" => timed(id, |r| {
            let f = a.fconst();
            each(r, budget, |r| {
                let x = st.next(a);
                same(r, id, &[&x], a.res(&a.res(&x, &f), &f), x.clone());
                true
            })
        }),
        "prop5.3" => timed(id, |r| {
            let pair = |st: &mut SampleStream| {
                let x = st.next(a);
                let x1 = if st.one_in(3) { a.x_up(&x) } else { st.next(a) };
                if a.compare(&x, &x1).is_le() {
                    (x, x1)
                } else {
                    (x1, x)
                }
            };
            each(r, budget, |r| {
                let (x, x1) = pair(&mut st);
                let (y, y1) = if st.one_in(4) { (x.clone(), x1.clone()) } else { pair(&mut st) };
                if x == x1 || y == y1 {
                    return false;
                }
                let ok = a.compare(&a.mul(&x, &y), &a.mul(&x1, &y1)).is_lt();
                holds(r, id, &[&x, &x1, &y, &y1], ok, "x*y < x1*y1");
                true
            })
        }),
        "lemma5.4" => timed(id, |r| {
            let max = |p: C::Elem, q: C::Elem| if a.compare(&p, &q).is_lt() { q } else { p };
            each(r, budget, |r| {
                let (x, y) = (st.next(a), st.next(a));
                let m = max(a.tau(&x), a.tau(&y));
                same(r, "tau(x*y)", &[&x, &y], a.tau(&a.mul(&x, &y)), m.clone());
                same(r, "tau(res(x,y))", &[&x, &y], a.tau(&a.res(&x, &y)), m);
                same(r, "tau(not x)", &[&x], a.tau(&a.comp(&x)), a.tau(&x));
                true
            })
        }),
        "thm2.4" => timed(id, |r| group_part_equivalence(a, &mut st, budget, r)),
        "duality" => timed(id, |r| {
            each(r, budget, |r| {
                let x = st.next(a);
                same(r, id, &[&x], a.comp(&a.x_down(&x)), a.x_up(&a.comp(&x)));
                true
            })
        }),
        _ => return check_stepped(a, id, budget, &mut st),
    };
    Ok(r)
}

/// Group characterisation: a chain whose only positive idempotent is `t`
/// has `τ ≡ t`, inverses `¬x` and cancellation; otherwise `u = τ(u) > t`
/// witnesses failure of all three.
fn group_part_equivalence<C: Chain>(a: &C, st: &mut SampleStream, budget: usize, r: &mut Report) {
    let t = a.unit();
    let idems = a.positive_idempotents();
    if let Some(u) = idems.get(1) {
        r.sample();
        holds(r, "tau(u)", &[u], a.tau(u) == *u && *u != t, "tau(u) = u > t");
        holds(r, "u*u=u*t", &[u], a.mul(u, u) == a.mul(u, &t), "u cancels nothing");
        return;
    }
    each(r, budget, |r| {
        let (x, p) = (st.next(a), st.next(a));
        let q = if st.one_in(2) { a.x_up(&p) } else { st.next(a) };
        same(r, "tau", &[&x], a.tau(&x), t.clone());
        same(r, "inverse", &[&x], a.mul(&x, &a.comp(&x)), t.clone());
        let cancels = (a.mul(&x, &p) == a.mul(&x, &q)) == (p == q);
        holds(r, "cancellative", &[&x, &p, &q], cancels, "x*p = x*q iff p = q");
        true
    });
}

/// Element pools relative to the smallest positive idempotent `u`, with the
/// gap sets taken from their defining equations.
struct Pools<E> {
    below: Vec<E>,
    ker: Vec<E>,
    geu: Vec<E>,
    gap: Vec<E>,
    ps: Vec<E>,
    xt: Vec<E>,
}

impl<E: Clone + Ord> Pools<E> {
    fn new<C: Chain<Elem = E>>(s: &Step<&C>, st: &mut SampleStream, n: usize) -> Pools<E> {
        let a = s.alg();
        let (u, nu) = (s.u(), s.neg_u());
        let mut p = Pools { below: vec![], ker: vec![], geu: vec![], gap: vec![], ps: vec![], xt: vec![] };
        let all: BTreeSet<E> = candidates(*a, st, n).into_iter().collect();
        for x in all {
            if s.below(&x) {
                if a.compare(nu, &x).is_lt() && a.compare(&x, u).is_lt() {
                    p.ker.push(x.clone());
                }
                p.below.push(x);
                continue;
            }
            if s.in_xt(&x) {
                p.xt.push(x.clone());
            }
            if is_gap(s, &x) {
                if is_ps(s, &x) {
                    p.ps.push(x.clone());
                }
                if !s.is_top_c(&x) {
                    p.gap.push(x.clone());
                }
            }
            p.geu.push(x);
        }
        p
    }
}

fn is_gap<C: Chain>(s: &Step<C>, x: &C::Elem) -> bool {
    !s.below(x) && s.alg().compare(&s.alg().x_down(x), x).is_lt()
}

/// Pseudo top-extremal by definition: a gap top with `x∗¬u = x_↓`.
fn is_ps<C: Chain>(s: &Step<C>, x: &C::Elem) -> bool {
    is_gap(s, x) && s.bot_of(x) == s.alg().x_down(x)
}

fn is_g2<C: Chain>(s: &Step<C>, x: &C::Elem) -> bool {
    is_gap(s, x) && s.bot_of(x) == *x
}

const POOL: usize = 3000;

fn check_stepped<C: Chain>(a: &C, id: &str, budget: usize, st: &mut SampleStream) -> Result<Report, LawError> {
    let known = ["prop7.2.eqs", "prop9.2", "prop10.1.3", "remark11.4"];
    let sub = id.strip_prefix("prop8.2.").and_then(|k| k.parse::<u8>().ok()).filter(|k| (1..=6).contains(k));
    if !known.contains(&id) && sub.is_none() {
        return Err(LawError::UnknownLaw(id.to_string()));
    }
    let s = Step::new(a)?;
    match id {
        "prop9.2" => s.require(Branch::Idem)?,
        "prop10.1.3" => s.require(Branch::NonIdem)?,
        _ => {}
    }
    let start = Instant::now();
    let p = Pools::new(&s, st, POOL.max(budget));
    let mut r = Report::new(id);
    let need = |r: &mut Report, pool: &[C::Elem], name: &str| {
        if pool.is_empty() {
            r.vacuous.push(name.to_string());
            false
        } else {
            true
        }
    };
    match (id, sub) {
        ("prop7.2.eqs", _) => {
            if need(&mut r, &p.below, "v") {
                extremal_eqs(&s, &p, st, budget, &mut r);
            }
        }
        (_, Some(k)) => {
            let pool = match k {
                1 | 3 => &p.below,
                2 => &p.gap,
                _ => &p.ps,
            };
            let name = match k {
                1 | 3 => "v",
                2 => "gap",
                _ => "TopPs",
            };
            if need(&mut r, pool, name) {
                gap_claim(&s, k, &p, st, budget, &mut r);
            }
        }
        ("prop9.2", _) => gamma_disjoint(&s, &p, &mut r),
        ("prop10.1.3", _) => {
            if need(&mut r, &p.xt, "XT") {
                each(&mut r, budget, |r| {
                    let x = st.pick(&p.xt);
                    let (d, up) = (s.down2(x), s.up2(x));
                    holds(r, "down in XT", &[x, &d], s.in_xt(&d), "x_dd in XT");
                    holds(r, "up in XT", &[x, &up], s.in_xt(&up), "x_uu in XT");
                    holds(r, "strict", &[x], a.compare(&d, x).is_lt() && a.compare(x, &up).is_lt(), "x_dd < x < x_uu");
                    same(r, "up(down x)", &[x], s.up2(&d), x.clone());
                    same(r, "down(up x)", &[x], s.down2(&up), x.clone());
                    holds(r, "not x in XT", &[x], s.in_xt(&a.comp(x)), "XT closed under complement");
                    true
                });
            }
        }
        ("remark11.4", _) => nucleus(&s, &p, st, budget, &mut r),
        _ => unreachable!(),
    }
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Extremal identities: `⊥_[v] = ¬⊤_[¬v]`, both have `τ = u`, they bound every
/// element of the component of `v`, and they are the covers of `v` when
/// `u = t_↑`.
fn extremal_eqs<C: Chain>(s: &Step<&C>, p: &Pools<C::Elem>, st: &mut SampleStream, budget: usize, r: &mut Report) {
    let a = s.alg();
    let u = s.u().clone();
    let cover = a.x_up(&a.unit()) == u;
    each(r, budget, |r| {
        let v = st.pick(&p.below);
        let (top, bot) = (s.top_of(v), s.bot_of(v));
        same(r, "bot=not top[not v]", &[v], bot.clone(), a.comp(&s.top_of(&a.comp(v))));
        same(r, "tau(top)", &[v, &top], a.tau(&top), u.clone());
        same(r, "tau(bot)", &[v, &bot], a.tau(&bot), u.clone());
        holds(r, "bot<v<top", &[v], a.compare(&bot, v).is_lt() && a.compare(v, &top).is_lt(), "bot[v] < v < top[v]");
        if cover {
            same(r, "top=v_up", &[v], top.clone(), a.x_up(v));
            same(r, "bot=v_dn", &[v], bot.clone(), a.x_down(v));
        }
        if !p.ker.is_empty() {
            let g = st.pick(&p.ker);
            let w = a.mul(v, g);
            holds(
                r,
                "component bound",
                &[v, g, &w],
                a.compare(&bot, &w).is_lt() && a.compare(&w, &top).is_lt(),
                "bot[v] < v*g < top[v]",
            );
            same(r, "top[v*g]", &[v, g], s.top_of(&w), top.clone());
        }
        true
    });
}

fn gap_claim<C: Chain>(s: &Step<&C>, k: u8, p: &Pools<C::Elem>, st: &mut SampleStream, budget: usize, r: &mut Report) {
    let a = s.alg();
    let u = s.u().clone();
    each(r, budget, |r| {
        match k {
            1 => {
                let v = st.pick(&p.below);
                let top = s.top_of(v);
                holds(r, "TopPs meets TopC", &[v, &top], !is_ps(s, &top), "top[v] not in TopPs");
                holds(r, "G2 meets TopC", &[v, &top], !is_g2(s, &top), "top[v] not in G2");
                let bot = s.bot_of(v);
                let above = a.x_up(&bot);
                holds(
                    r,
                    "BotPs meets BotC",
                    &[v, &bot],
                    !(is_ps(s, &above) && a.x_down(&above) == bot),
                    "bot[v] not in BotPs",
                );
                if !p.ps.is_empty() {
                    let x = st.pick(&p.ps);
                    holds(r, "BotPs in tau>=u", &[x], !s.below(&a.x_down(x)), "tau(x_dn) >= u");
                }
            }
            2 => {
                let x = st.pick(&p.gap);
                holds(r, id8(k), &[x], is_ps(s, x) || is_g2(s, x), "gap outside TopC is TopPs or G2");
            }
            3 => {
                let v = st.pick(&p.below);
                let x = st.pick(&p.geu);
                let xv = a.mul(x, v);
                let lhs = a.mul(x, &s.bot_of(v));
                if s.is_top_c(x) {
                    holds(r, "TopC", &[x, v], s.is_top_c(&xv), "x*v in TopC");
                    same(r, "TopC", &[x, v], lhs, s.down2(&xv));
                } else if is_ps(s, x) {
                    holds(r, "TopPs", &[x, v], is_ps(s, &xv), "x*v in TopPs");
                    same(r, "TopPs", &[x, v], lhs, a.x_down(&xv));
                } else {
                    same(r, "plain", &[x, v], lhs, xv);
                }
            }
            4 => {
                let x = st.pick(&p.ps);
                let y = a.comp(&a.x_down(x));
                holds(r, id8(k), &[x, &y], is_ps(s, &y), "not(x_dn) in TopPs");
            }
            5 => {
                let (x, y) = (st.pick(&p.ps), st.pick(&p.ps));
                let xy = a.mul(x, y);
                holds(r, id8(k), &[x, y], s.bot_of(&xy) != xy, "(x*y)*not u != x*y");
            }
            _ => {
                let x = st.pick(&p.ps);
                same(r, id8(k), &[x], a.tau(x), u.clone());
            }
        }
        true
    });
}

fn id8(k: u8) -> &'static str {
    ["", "prop8.2.1", "prop8.2.2", "prop8.2.3", "prop8.2.4", "prop8.2.5", "prop8.2.6"][k as usize]
}

/// The collapse classes `{⊤_[v], ⊥_[v]}` and `{p, p_↓}` are pairwise disjoint
/// when `¬u` is idempotent.
fn gamma_disjoint<C: Chain>(s: &Step<&C>, p: &Pools<C::Elem>, r: &mut Report) {
    let a = s.alg();
    let mut owner: BTreeMap<C::Elem, (C::Elem, C::Elem)> = BTreeMap::new();
    let classes =
        p.below.iter().map(|v| (s.top_of(v), s.bot_of(v))).chain(p.ps.iter().map(|x| (x.clone(), a.x_down(x))));
    for (hi, lo) in classes {
        r.sample();
        holds(r, "distinct ends", &[&hi, &lo], hi != lo, "class ends differ");
        for e in [&hi, &lo] {
            match owner.get(e) {
                Some(c) if *c != (hi.clone(), lo.clone()) => {
                    r.fail(Violation::new("overlap", &[e], format!("{{{}, {}}}", c.0, c.1), format!("{{{hi}, {lo}}}")))
                }
                Some(_) => {}
                None => {
                    owner.insert(e.clone(), (hi.clone(), lo.clone()));
                }
            }
        }
    }
    if p.ps.is_empty() {
        r.vacuous.push("TopPs".to_string());
    }
}

/// `φ(x) = ¬(¬(x∗¬u)∗¬u)` is a closure operator whose image is the branch
/// quotient: the largest element of each collapse class when `¬u` is
/// idempotent, and `X_{τ≥u}` otherwise.
fn nucleus<C: Chain>(s: &Step<&C>, p: &Pools<C::Elem>, st: &mut SampleStream, budget: usize, r: &mut Report) {
    let a = s.alg();
    let all: Vec<C::Elem> = p.below.iter().chain(&p.geu).cloned().collect();
    let image = |r: &mut Report, x: &C::Elem| {
        let f = s.phi(x);
        match s.branch() {
            Branch::Idem => same(r, "image", &[x], f, s.gamma_canonical(x)),
            Branch::NonIdem => {
                holds(r, "image", &[x, &f], !s.below(&f), "tau(phi x) >= u");
                if !s.below(x) {
                    same(r, "fixed", &[x], f, x.clone());
                }
            }
        }
    };
    each(r, budget, |r| {
        let (x, y) = (st.pick(&all), st.pick(&all));
        let fx = s.phi(x);
        holds(r, "extensive", &[x], a.le(x, &fx), "x <= phi x");
        same(r, "idempotent", &[x], s.phi(&fx), fx.clone());
        if a.le(x, y) {
            holds(r, "monotone", &[x, y], a.le(&fx, &s.phi(y)), "phi x <= phi y");
        }
        image(r, x);
        true
    });
    let win = a.window(&Bounds::window());
    if win.len() > WINDOW_CAP {
        r.vacuous.push("window".to_string());
        return;
    }
    for x in &win {
        image(r, x);
    }
}

const WINDOW_CAP: usize = 50_000;
