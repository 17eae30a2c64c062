use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use rand::RngCore;

use crate::{Algebra, Bounds, Elem};

/// An ordered commutative monoid.
pub trait Monoid {
    type Elem: Clone + Eq + Ord + Hash + Debug + Display;

    fn unit(&self) -> Self::Elem;

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        x.cmp(y)
    }

    fn le(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.compare(x, y) != Ordering::Greater
    }
}

/// An involutive commutative residuated chain, with unchecked operations.
/// Arguments are assumed valid; use [`crate::ops`] to validate.
pub trait Chain: Monoid {
    /// Residual complement.
    fn comp(&self, x: &Self::Elem) -> Self::Elem;

    fn res(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.comp(&self.mul(x, &self.comp(y)))
    }

    fn tau(&self, x: &Self::Elem) -> Self::Elem {
        self.res(x, x)
    }

    fn fconst(&self) -> Self::Elem {
        self.comp(&self.unit())
    }

    fn is_invertible(&self, x: &Self::Elem) -> bool {
        self.mul(x, &self.comp(x)) == self.unit()
    }

    /// The element covered by `x`, or `x` when there is none.
    fn x_down(&self, x: &Self::Elem) -> Self::Elem;

    /// The element covering `x`, or `x` when there is none.
    fn x_up(&self, x: &Self::Elem) -> Self::Elem;

    fn is_valid(&self, x: &Self::Elem) -> bool;

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> Self::Elem;

    /// All elements within the bounds, ascending.
    fn window(&self, b: &Bounds) -> Vec<Self::Elem>;

    /// Ascending idempotents `>= t`.
    fn positive_idempotents(&self) -> Vec<Self::Elem>;
}

impl Monoid for Algebra {
    type Elem = Elem;

    fn unit(&self) -> Elem {
        self.unit_ref().clone()
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        self.mul_raw(x, y)
    }
}

impl Chain for Algebra {
    fn comp(&self, x: &Elem) -> Elem {
        self.comp_raw(x)
    }

    fn is_invertible(&self, x: &Elem) -> bool {
        self.is_gr(x)
    }

    fn x_down(&self, x: &Elem) -> Elem {
        self.x_down_raw(x)
    }

    fn x_up(&self, x: &Elem) -> Elem {
        self.x_up_raw(x)
    }

    fn is_valid(&self, x: &Elem) -> bool {
        self.is_valid_elem(x)
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> Elem {
        self.sample_elem(rng, b)
    }

    fn window(&self, b: &Bounds) -> Vec<Elem> {
        self.window_elems(b)
    }

    fn positive_idempotents(&self) -> Vec<Elem> {
        self.idempotents().to_vec()
    }
}

impl<C: Monoid + ?Sized> Monoid for &C {
    type Elem = C::Elem;

    fn unit(&self) -> Self::Elem {
        (**self).unit()
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (**self).mul(x, y)
    }

    fn compare(&self, x: &Self::Elem, y: &Self::Elem) -> Ordering {
        (**self).compare(x, y)
    }
}

impl<C: Chain + ?Sized> Chain for &C {
    fn comp(&self, x: &Self::Elem) -> Self::Elem {
        (**self).comp(x)
    }

    fn res(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (**self).res(x, y)
    }

    fn is_invertible(&self, x: &Self::Elem) -> bool {
        (**self).is_invertible(x)
    }

    fn x_down(&self, x: &Self::Elem) -> Self::Elem {
        (**self).x_down(x)
    }

    fn x_up(&self, x: &Self::Elem) -> Self::Elem {
        (**self).x_up(x)
    }

    fn is_valid(&self, x: &Self::Elem) -> bool {
        (**self).is_valid(x)
    }

    fn sample(&self, rng: &mut dyn RngCore, b: &Bounds) -> Self::Elem {
        (**self).sample(rng, b)
    }

    fn window(&self, b: &Bounds) -> Vec<Self::Elem> {
        (**self).window(b)
    }

    fn positive_idempotents(&self) -> Vec<Self::Elem> {
        (**self).positive_idempotents()
    }
}
