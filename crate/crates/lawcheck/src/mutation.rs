use chain_core::{Algebra, Bounds, Chain, Monoid};
use loag::GroupDesc;
use rand::RngCore;

use crate::{check_law, Report};

/// A deliberate corruption of `∗` or `¬`, each aimed at one law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `x∗y` becomes `x∗(y∗y)` when `x < y`.
    Commutativity,
    /// `x∗x` is pushed up by `t_↑` off the unit.
    Associativity,
    /// Multiplying by `t` moves to the upper cover.
    Unit,
    /// `¬` is the identity.
    Adjointness,
    /// `¬x` is lowered by one cover below `t`.
    Involution,
    /// `¬x` is always lowered by one cover.
    Oddness,
    /// `¬x` is always raised by one cover.
    RaiseComp,
    /// `x∗x = x`.
    IdempotentSquares,
    /// `¬x` becomes `¬x∗¬x`.
    SquareComp,
    /// Products above `t` collapse to `t`.
    CollapseAbove,
}

impl Mutation {
    pub const ALL: [Mutation; 10] = [
        Mutation::Commutativity,
        Mutation::Associativity,
        Mutation::Unit,
        Mutation::Adjointness,
        Mutation::Involution,
        Mutation::Oddness,
        Mutation::RaiseComp,
        Mutation::IdempotentSquares,
        Mutation::SquareComp,
        Mutation::CollapseAbove,
    ];

    /// The law expected to catch this mutation.
    pub fn law(self) -> &'static str {
        match self {
            Mutation::Commutativity => "commutativity",
            Mutation::Associativity => "associativity",
            Mutation::Unit => "unit",
            Mutation::Adjointness => "adjointness",
            Mutation::Involution => "involution",
            Mutation::Oddness => "oddness",
            Mutation::RaiseComp => "eq2.2",
            Mutation::IdempotentSquares => "prop5.3",
            Mutation::SquareComp => "lemma5.4",
            Mutation::CollapseAbove => "thm2.4",
        }
    }
}

/// `inner` with one operation corrupted. Residual, `τ` and invertibility are
/// derived from the corrupted operations.
#[derive(Debug, Clone)]
pub struct Mutant<C> {
    inner: C,
    m: Mutation,
}

impl<C: Chain> Mutant<C> {
    pub fn new(inner: C, m: Mutation) -> Mutant<C> {
        Mutant { inner, m }
    }
}

impl<C: Chain> Monoid for Mutant<C> {
    type Elem = C::Elem;

    fn unit(&self) -> C::Elem {
        self.inner.unit()
    }

    fn mul(&self, x: &C::Elem, y: &C::Elem) -> C::Elem {
        let a = &self.inner;
        let t = a.unit();
        match self.m {
            Mutation::Commutativity if x < y => a.mul(x, &a.mul(y, y)),
            Mutation::Associativity if x == y && *x != t => a.mul(&a.mul(x, y), &a.x_up(&t)),
            Mutation::Unit if *x == t => a.x_up(y),
            Mutation::Unit if *y == t => a.x_up(x),
            Mutation::IdempotentSquares if x == y => x.clone(),
            Mutation::CollapseAbove => {
                let p = a.mul(x, y);
                if p > t {
                    t
                } else {
                    p
                }
            }
            _ => a.mul(x, y),
        }
    }
}

impl<C: Chain> Chain for Mutant<C> {
    fn comp(&self, x: &C::Elem) -> C::Elem {
        let a = &self.inner;
        let n = a.comp(x);
        match self.m {
            Mutation::Adjointness => x.clone(),
            Mutation::Involution if *x < a.unit() => a.x_down(&n),
            Mutation::Oddness => a.x_down(&n),
            Mutation::RaiseComp => a.x_up(&n),
            Mutation::SquareComp => a.mul(&n, &n),
            _ => n,
        }
    }

    fn x_down(&self, x: &C::Elem) -> C::Elem {
        self.inner.x_down(x)
    }

    fn x_up(&self, x: &C::Elem) -> C::Elem {
        self.inner.x_up(x)
    }

    fn is_valid(&self, x: &C::Elem) -> bool {
        self.inner.is_valid(x)
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> C::Elem {
        self.inner.sample(rng, b)
    }

    fn window(&self, b: &Bounds) -> Vec<C::Elem> {
        self.inner.window(b)
    }

    fn positive_idempotents(&self) -> Vec<C::Elem> {
        self.inner.positive_idempotents()
    }
}

/// Run each mutation's target law on the mutated integers. Every report
/// should fail.
pub fn self_test(budget: usize, seed: u64) -> Vec<(Mutation, Report)> {
    let z = Algebra::group(GroupDesc::Int);
    Mutation::ALL
        .iter()
        .map(|&m| {
            let r = check_law(&Mutant::new(&z, m), m.law(), budget, seed).expect("listed law");
            (m, r)
        })
        .collect()
}
