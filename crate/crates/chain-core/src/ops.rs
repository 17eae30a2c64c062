//! Validating forms of the chain operations.

use crate::{Algebra, Chain, ChainError, Elem, Monoid};

fn check(a: &Algebra, x: &Elem) -> Result<(), ChainError> {
    if a.is_valid_elem(x) {
        Ok(())
    } else {
        Err(ChainError::InvalidElement(format!("{x} is not an element of {a}")))
    }
}

pub fn validate_elem(a: &Algebra, x: &Elem) -> bool {
    a.is_valid_elem(x)
}

pub fn le(a: &Algebra, x: &Elem, y: &Elem) -> Result<bool, ChainError> {
    check(a, x)?;
    check(a, y)?;
    Ok(x <= y)
}

pub fn mul(a: &Algebra, x: &Elem, y: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    check(a, y)?;
    Ok(a.mul_raw(x, y))
}

pub fn comp(a: &Algebra, x: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    Ok(a.comp_raw(x))
}

pub fn res(a: &Algebra, x: &Elem, y: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    check(a, y)?;
    Ok(Chain::res(a, x, y))
}

pub fn unit(a: &Algebra) -> Elem {
    a.unit_ref().clone()
}

pub fn fconst(a: &Algebra) -> Elem {
    a.fconst()
}

pub fn tau(a: &Algebra, x: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    Ok(a.tau(x))
}

pub fn x_down(a: &Algebra, x: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    Ok(a.x_down_raw(x))
}

pub fn x_up(a: &Algebra, x: &Elem) -> Result<Elem, ChainError> {
    check(a, x)?;
    Ok(a.x_up_raw(x))
}

/// `x * comp(x) = t`.
pub fn is_invertible(a: &Algebra, x: &Elem) -> Result<bool, ChainError> {
    check(a, x)?;
    Ok(a.mul_raw(x, &a.comp_raw(x)) == Monoid::unit(a))
}

pub fn positive_idempotents(a: &Algebra) -> Vec<Elem> {
    a.idempotents().to_vec()
}
