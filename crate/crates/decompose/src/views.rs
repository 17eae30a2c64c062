use std::collections::BTreeSet;

use chain_core::{Algebra, Bounds, Chain, Elem, MidSlice, Monoid};
use rand::RngCore;

use crate::{Branch, DecomposeError, ElemClass, Step};

/// A class of the collapse by the components of `X_{τ<u}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BetaClass {
    /// A component, named by its canonical point.
    Component(Elem),
    /// An element with `τ(x) ≥ u`.
    Singleton(Elem),
}

impl BetaClass {
    pub fn rep(&self) -> &Elem {
        match self {
            BetaClass::Component(r) | BetaClass::Singleton(r) => r,
        }
    }
}

/// A class of the second collapse, available when `¬u` is idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaClass<E> {
    /// A component together with its two extremals, named by the top extremal.
    Triple(E),
    /// A pseudo-extremal pair `{p, p_↓}`, named by `p`.
    GapPair(E),
    Plain(E),
}

impl<E> GammaClass<E> {
    pub fn rep(&self) -> &E {
        match self {
            GammaClass::Triple(r) | GammaClass::GapPair(r) | GammaClass::Plain(r) => r,
        }
    }
}

fn canon_window<E: Ord + Clone>(xs: Vec<E>, f: impl Fn(&E) -> E) -> Vec<E> {
    xs.iter().map(f).collect::<BTreeSet<_>>().into_iter().collect()
}

/// The quotient collapsing each component of `X_{τ<u}` to a point. Classes
/// are represented by elements of the original algebra: the canonical point
/// of a component, or the element itself.
#[derive(Debug, Clone)]
pub struct BetaView<'a> {
    step: Step<&'a Algebra>,
}

impl<'a> BetaView<'a> {
    pub fn new(a: &'a Algebra) -> Result<BetaView<'a>, DecomposeError> {
        let step = Step::new(a)?;
        match a.factors() {
            Some((_, y)) if y.is_group() => Ok(BetaView { step }),
            _ => Err(DecomposeError::Unsupported(format!("components of {a} have no canonical points"))),
        }
    }

    pub fn step(&self) -> &Step<&'a Algebra> {
        &self.step
    }

    pub fn beta(&self, x: &Elem) -> BetaClass {
        if self.step.below(x) {
            let rep = self.step.alg().canonical_rep(x).unwrap_or_else(|| x.clone());
            BetaClass::Component(rep)
        } else {
            BetaClass::Singleton(x.clone())
        }
    }

    pub fn canon(&self, x: &Elem) -> Elem {
        match self.beta(x) {
            BetaClass::Component(r) | BetaClass::Singleton(r) => r,
        }
    }

    /// Canonical point of the component whose top extremal is `top`.
    fn component_below(&self, top: &Elem) -> Option<Elem> {
        let a = self.step.alg();
        let Elem::Pair(xi, _) = top else {
            return None;
        };
        let (_, y) = a.factors()?;
        let base = match a.mid_slice(xi) {
            MidSlice::Whole => Elem::Leaf(y.leaf_desc()?.zero()),
            MidSlice::Coset { base, .. } => Elem::Leaf(base),
            MidSlice::Empty => return None,
        };
        Some(Elem::mid((**xi).clone(), base))
    }
}

impl Monoid for BetaView<'_> {
    type Elem = Elem;

    fn unit(&self) -> Elem {
        self.canon(self.step.alg().unit_ref())
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.canon(&self.step.alg().mul(x, y))
    }
}

impl Chain for BetaView<'_> {
    fn comp(&self, x: &Elem) -> Elem {
        self.canon(&self.step.alg().comp(x))
    }

    fn x_down(&self, x: &Elem) -> Elem {
        let (s, a) = (&self.step, self.step.alg());
        if s.below(x) {
            return self.canon(&s.bot_of(x));
        }
        if s.is_top_c(x) {
            if let Some(v) = self.component_below(x) {
                return self.canon(&v);
            }
        }
        self.canon(&a.x_down(x))
    }

    fn x_up(&self, x: &Elem) -> Elem {
        let (s, a) = (&self.step, self.step.alg());
        if s.below(x) {
            return self.canon(&s.top_of(x));
        }
        let nx = a.comp(x);
        if s.is_top_c(&nx) {
            if let Some(v) = self.component_below(&nx) {
                return self.canon(&a.comp(&v));
            }
        }
        self.canon(&a.x_up(x))
    }

    fn is_valid(&self, x: &Elem) -> bool {
        self.step.alg().is_valid(x) && self.canon(x) == *x
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> Elem {
        self.canon(&self.step.alg().sample(rng, b))
    }

    fn window(&self, b: &Bounds) -> Vec<Elem> {
        canon_window(self.step.alg().window(b), |x| self.canon(x))
    }

    fn positive_idempotents(&self) -> Vec<Elem> {
        canon_window(self.step.alg().positive_idempotents(), |x| self.canon(x))
    }
}

/// The second collapse: components merge with their extremals and
/// pseudo-extremal pairs merge. Requires `¬u` idempotent. Each class is
/// represented by its largest element.
#[derive(Debug, Clone)]
pub struct GammaView<C: Chain> {
    step: Step<C>,
}

impl<C: Chain> GammaView<C> {
    pub fn new(alg: C) -> Result<GammaView<C>, DecomposeError> {
        let step = Step::new(alg)?;
        step.require(Branch::Idem)?;
        Ok(GammaView { step })
    }

    pub fn step(&self) -> &Step<C> {
        &self.step
    }

    pub fn canon(&self, x: &C::Elem) -> C::Elem {
        self.step.gamma_canonical(x)
    }

    pub fn class(&self, x: &C::Elem) -> GammaClass<C::Elem> {
        let c = self.canon(x);
        match self.step.classify(&c) {
            ElemClass::TopC => GammaClass::Triple(c),
            ElemClass::TopPs => GammaClass::GapPair(c),
            _ => GammaClass::Plain(c),
        }
    }
}

impl<C: Chain> Monoid for GammaView<C> {
    type Elem = C::Elem;

    fn unit(&self) -> C::Elem {
        self.canon(self.step.u())
    }

    fn mul(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
        self.canon(&self.step.alg().mul(x, y))
    }

    fn compare(&self, x: &C::Elem, y: &C::Elem) -> std::cmp::Ordering {
        self.step.alg().compare(x, y)
    }
}

impl<C: Chain> Chain for GammaView<C> {
    fn comp(&self, x: &C::Elem) -> C::Elem {
        self.canon(&self.step.alg().comp(x))
    }

    fn x_down(&self, x: &C::Elem) -> C::Elem {
        let a = self.step.alg();
        let low = self.step.bot_of(x);
        let d = a.x_down(&low);
        if a.compare(&d, &low).is_lt() {
            self.canon(&d)
        } else {
            x.clone()
        }
    }

    fn x_up(&self, x: &C::Elem) -> C::Elem {
        let a = self.step.alg();
        let d = a.x_up(x);
        if a.compare(&d, x).is_gt() {
            self.canon(&d)
        } else {
            x.clone()
        }
    }

    fn is_valid(&self, x: &C::Elem) -> bool {
        self.step.alg().is_valid(x) && self.canon(x) == *x
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> C::Elem {
        self.canon(&self.step.alg().sample(rng, b))
    }

    fn window(&self, b: &Bounds) -> Vec<C::Elem> {
        canon_window(self.step.alg().window(b), |x| self.canon(x))
    }

    fn positive_idempotents(&self) -> Vec<C::Elem> {
        let idems = self.step.alg().positive_idempotents();
        canon_window(idems[1..].to_vec(), |x| self.canon(x))
    }
}

/// The elements with `τ(x) ≥ u`, with unit `u` and complement
/// `x ↦ ¬(x∗¬u)`. Requires `¬u` not idempotent.
#[derive(Debug, Clone)]
pub struct TauGeU<C: Chain> {
    step: Step<C>,
}

impl<C: Chain> TauGeU<C> {
    pub fn new(alg: C) -> Result<TauGeU<C>, DecomposeError> {
        let step = Step::new(alg)?;
        step.require(Branch::NonIdem)?;
        Ok(TauGeU { step })
    }

    pub fn step(&self) -> &Step<C> {
        &self.step
    }

    /// Push an element of `X_{τ<u}` to its top extremal; others are kept.
    pub fn lift(&self, x: &C::Elem) -> C::Elem {
        if self.step.below(x) {
            self.step.top_of(x)
        } else {
            x.clone()
        }
    }
}

impl<C: Chain> Monoid for TauGeU<C> {
    type Elem = C::Elem;

    fn unit(&self) -> C::Elem {
        self.step.u().clone()
    }

    fn mul(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
        self.step.alg().mul(x, y)
    }

    fn compare(&self, x: &C::Elem, y: &C::Elem) -> std::cmp::Ordering {
        self.step.alg().compare(x, y)
    }
}

impl<C: Chain> Chain for TauGeU<C> {
    fn comp(&self, x: &C::Elem) -> C::Elem {
        self.step.alg().comp(&self.step.bot_of(x))
    }

    fn x_down(&self, x: &C::Elem) -> C::Elem {
        self.step.down2(x)
    }

    fn x_up(&self, x: &C::Elem) -> C::Elem {
        self.comp(&self.step.down2(&self.comp(x)))
    }

    fn is_valid(&self, x: &C::Elem) -> bool {
        self.step.alg().is_valid(x) && !self.step.below(x)
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> C::Elem {
        self.lift(&self.step.alg().sample(rng, b))
    }

    fn window(&self, b: &Bounds) -> Vec<C::Elem> {
        canon_window(self.step.alg().window(b), |x| self.lift(x))
    }

    fn positive_idempotents(&self) -> Vec<C::Elem> {
        self.step.alg().positive_idempotents()[1..].to_vec()
    }
}
