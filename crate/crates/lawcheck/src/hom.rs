use std::collections::BTreeMap;
use std::time::Instant;

use chain_core::{Chain, Monoid};

use crate::laws::law_seed;
use crate::{Report, SampleStream, Violation};

/// What a map is claimed to preserve besides products, the unit and the
/// order.
pub struct Claims<'f, E> {
    /// Complement of the target, when complements are claimed.
    pub comp: Option<&'f dyn Fn(&E) -> E>,
    /// Injective, hence strictly order-preserving.
    pub injective: bool,
}

impl<E> Claims<'_, E> {
    pub fn embedding() -> Self {
        Claims { comp: None, injective: true }
    }
}

/// Check that `map` preserves products, the unit and the order on `budget`
/// sampled pairs of `src`, plus whatever `claims` adds. A map error counts as
/// a violation.
pub fn check_hom<A, B, F>(
    law: &str,
    src: &A,
    dst: &B,
    map: F,
    claims: Claims<'_, B::Elem>,
    budget: usize,
    seed: u64,
) -> Report
where
    A: Chain,
    B: Monoid,
    F: Fn(&A::Elem) -> Result<B::Elem, String>,
{
    let start = Instant::now();
    let mut r = Report::new(law);
    let mut st = SampleStream::new(law_seed(seed, law));
    let mut seen: BTreeMap<B::Elem, A::Elem> = BTreeMap::new();
    let mut apply = |r: &mut Report, x: &A::Elem| match map(x) {
        Ok(y) => {
            if !claims.injective {
                return Some(y);
            }
            if let Some(prev) = seen.insert(y.clone(), x.clone()) {
                if prev != *x {
                    r.fail(Violation::new("injective", &[&prev, x], &y, "distinct images"));
                }
            }
            Some(y)
        }
        Err(e) => {
            r.fail(Violation::new("defined", &[x], "error", e));
            None
        }
    };
    r.sample();
    if let Some(fu) = apply(&mut r, &src.unit()) {
        if fu != dst.unit() {
            r.fail(Violation::new("unit", &[&src.unit()], &fu, dst.unit()));
        }
    }
    while r.samples <= budget {
        r.sample();
        let (x, y) = (st.next(src), st.next(src));
        let (Some(fx), Some(fy)) = (apply(&mut r, &x), apply(&mut r, &y)) else { continue };
        if let Some(fxy) = apply(&mut r, &src.mul(&x, &y)) {
            let want = dst.mul(&fx, &fy);
            if fxy != want {
                r.fail(Violation::new("mul", &[&x, &y], &fxy, &want));
            }
        }
        let (o, fo) = (src.compare(&x, &y), dst.compare(&fx, &fy));
        let ordered = if claims.injective { o == fo } else { o == fo || fo.is_eq() };
        if !ordered {
            r.fail(Violation::new("order", &[&x, &y], format!("{fo:?}"), format!("{o:?}")));
        }
        if let Some(comp) = claims.comp {
            if let Some(fnx) = apply(&mut r, &src.comp(&x)) {
                let want = comp(&fx);
                if fnx != want {
                    r.fail(Violation::new("comp", &[&x], &fnx, &want));
                }
            }
        }
    }
    r.elapsed = start.elapsed();
    r
}
