use std::cmp::Ordering;

use chain_core::Chain;

use crate::DecomposeError;

/// Whether `¬u` is idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Idem,
    NonIdem,
}

/// Position of an element relative to the components of `X_{τ<u}`.
///
/// `BotC` and `BotPs` are the complements of `TopC` and `TopPs`. When an
/// element qualifies for several kinds the first in declaration order wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemClass {
    GroupElemBelow,
    TopC,
    TopPs,
    BotC,
    BotPs,
    G2,
    Interior,
}

impl ElemClass {
    pub fn name(self) -> &'static str {
        match self {
            ElemClass::GroupElemBelow => "GroupElemBelow",
            ElemClass::TopC => "TopC",
            ElemClass::TopPs => "TopPs",
            ElemClass::BotC => "BotC",
            ElemClass::BotPs => "BotPs",
            ElemClass::G2 => "G2",
            ElemClass::Interior => "Interior",
        }
    }
}

/// Second entry of the ascending positive idempotents.
pub fn smallest_pos_idem<C: Chain>(a: &C) -> Result<C::Elem, DecomposeError> {
    a.positive_idempotents().get(1).cloned().ok_or(DecomposeError::OnlyUnitIdempotent)
}

pub fn branch<C: Chain>(a: &C, u: &C::Elem) -> Branch {
    let nu = a.comp(u);
    if a.mul(&nu, &nu) == nu {
        Branch::Idem
    } else {
        Branch::NonIdem
    }
}

/// A chain together with its smallest strictly positive idempotent `u`.
#[derive(Debug, Clone)]
pub struct Step<C: Chain> {
    alg: C,
    u: C::Elem,
    nu: C::Elem,
    branch: Branch,
}

impl<C: Chain> Step<C> {
    pub fn new(alg: C) -> Result<Step<C>, DecomposeError> {
        let u = smallest_pos_idem(&alg)?;
        let nu = alg.comp(&u);
        let branch = branch(&alg, &u);
        Ok(Step { alg, u, nu, branch })
    }

    pub fn alg(&self) -> &C {
        &self.alg
    }

    pub fn u(&self) -> &C::Elem {
        &self.u
    }

    pub fn neg_u(&self) -> &C::Elem {
        &self.nu
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn require(&self, b: Branch) -> Result<(), DecomposeError> {
        if self.branch == b {
            Ok(())
        } else {
            Err(DecomposeError::WrongBranch(b))
        }
    }

    pub fn check(&self, x: &C::Elem) -> Result<(), DecomposeError> {
        if self.alg.is_valid(x) {
            Ok(())
        } else {
            Err(DecomposeError::InvalidElement(x.to_string()))
        }
    }

    /// `τ(x) < u`.
    pub fn below(&self, x: &C::Elem) -> bool {
        self.alg.compare(&self.alg.tau(x), &self.u) == Ordering::Less
    }

    /// `⊤_[v] = v∗u`.
    pub fn top_of(&self, v: &C::Elem) -> C::Elem {
        self.alg.mul(v, &self.u)
    }

    /// `⊥_[v] = v∗¬u`.
    pub fn bot_of(&self, v: &C::Elem) -> C::Elem {
        self.alg.mul(v, &self.nu)
    }

    /// `TopC` or `TopPs` for an element with `τ(x) ≥ u`, read off from how
    /// `x∗¬u` sits relative to `x` and its lower cover.
    fn top_kind(&self, x: &C::Elem) -> Option<ElemClass> {
        let b = self.bot_of(x);
        let d = self.alg.x_down(x);
        if b != *x && b != d {
            Some(ElemClass::TopC)
        } else if b == d && self.alg.compare(&d, x) == Ordering::Less {
            Some(ElemClass::TopPs)
        } else {
            None
        }
    }

    pub fn classify(&self, x: &C::Elem) -> ElemClass {
        if self.below(x) {
            return ElemClass::GroupElemBelow;
        }
        if let Some(k) = self.top_kind(x) {
            return k;
        }
        match self.top_kind(&self.alg.comp(x)) {
            Some(ElemClass::TopC) => return ElemClass::BotC,
            Some(_) => return ElemClass::BotPs,
            None => {}
        }
        if self.alg.compare(&self.alg.x_down(x), x) == Ordering::Less {
            ElemClass::G2
        } else {
            ElemClass::Interior
        }
    }

    pub fn is_top_c(&self, x: &C::Elem) -> bool {
        !self.below(x) && self.top_kind(x) == Some(ElemClass::TopC)
    }

    pub fn is_top_ps(&self, x: &C::Elem) -> bool {
        !self.below(x) && self.top_kind(x) == Some(ElemClass::TopPs)
    }

    pub fn is_bot_c(&self, x: &C::Elem) -> bool {
        !self.below(x) && self.top_kind(&self.alg.comp(x)) == Some(ElemClass::TopC)
    }

    /// Membership in `X^T = TopC ∪ TopPs`.
    pub fn in_xt(&self, x: &C::Elem) -> bool {
        !self.below(x) && self.top_kind(x).is_some()
    }

    /// Membership in `X_{τ≥u} \ X^T`.
    pub fn in_plain(&self, x: &C::Elem) -> bool {
        !self.below(x) && self.top_kind(x).is_none()
    }

    /// `x_⇓`: `x∗¬u` on `TopC`, the lower cover otherwise.
    pub fn down2(&self, x: &C::Elem) -> C::Elem {
        if self.is_top_c(x) {
            self.bot_of(x)
        } else {
            self.alg.x_down(x)
        }
    }

    /// `x_⇑ = ¬((¬x)_⇓)`.
    pub fn up2(&self, x: &C::Elem) -> C::Elem {
        let a = &self.alg;
        a.comp(&self.down2(&a.comp(x)))
    }

    /// `φ(x) = ¬(¬(x∗¬u)∗¬u)`.
    pub fn phi(&self, x: &C::Elem) -> C::Elem {
        let a = &self.alg;
        a.comp(&a.mul(&a.comp(&self.bot_of(x)), &self.nu))
    }

    /// Largest element of the collapse class of `x` when `¬u` is idempotent:
    /// a component with its extremals is named by its top extremal, a
    /// pseudo-extremal pair by its upper point.
    pub fn gamma_canonical(&self, x: &C::Elem) -> C::Elem {
        let a = &self.alg;
        match self.classify(x) {
            ElemClass::GroupElemBelow => self.top_of(x),
            ElemClass::BotC => a.comp(&a.mul(&a.comp(x), &self.nu)),
            ElemClass::BotPs => a.x_up(x),
            _ => x.clone(),
        }
    }
}
