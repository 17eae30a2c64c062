use std::collections::BTreeSet;

use loag::{Coord, GroupDesc, GroupElem, Rational, SubSpec, SubgroupDesc};
use num_traits::Zero;
use rand::{Rng, RngCore};

use crate::algebra::slice_contains;
use crate::{Algebra, Elem, Family, HDesc, MidSlice, Node};

/// Magnitude and denominator bounds for sampled and enumerated coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub magnitude: i64,
    pub denom: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { magnitude: 6, denom: 8 }
    }
}

impl Bounds {
    /// The small exhaustive window: coordinates in `[-3, 3]`, denominators up to 4.
    pub fn window() -> Bounds {
        Bounds { magnitude: 3, denom: 4 }
    }
}

fn sample_coord(rng: &mut dyn RngCore, c: Coord, s: SubSpec, b: &Bounds) -> Rational {
    let m = b.magnitude.max(1);
    match (c, s) {
        (Coord::Triv, _) | (_, SubSpec::Trivial) => Rational::zero(),
        (_, SubSpec::Index(k)) => {
            let k = k as i64;
            let r = (m / k).max(1);
            Rational::from_integer((k * rng.gen_range(-r..=r)).into())
        }
        (Coord::Int, SubSpec::Full) => Rational::from_integer(rng.gen_range(-m..=m).into()),
        (Coord::Rat, SubSpec::Full) => {
            let d = rng.gen_range(1..=b.denom.max(1));
            let n = rng.gen_range(-m * d..=m * d);
            Rational::new(n.into(), d.into())
        }
    }
}

/// A random element of the subgroup `s` of `g`.
pub(crate) fn sample_group(rng: &mut dyn RngCore, g: &GroupDesc, s: &SubgroupDesc, b: &Bounds) -> GroupElem {
    let specs = s.normalize(g);
    GroupElem::new(g.coords().into_iter().zip(specs).map(|(c, sp)| sample_coord(rng, c, sp, b)).collect())
}

fn coord_values(c: Coord, b: &Bounds) -> Vec<Rational> {
    let m = b.magnitude;
    match c {
        Coord::Triv => vec![Rational::zero()],
        Coord::Int => (-m..=m).map(|n| Rational::from_integer(n.into())).collect(),
        Coord::Rat => {
            let mut set = BTreeSet::new();
            for d in 1..=b.denom.max(1) {
                for n in -m * d..=m * d {
                    set.insert(Rational::new(n.into(), d.into()));
                }
            }
            set.into_iter().collect()
        }
    }
}

/// All elements of `g` inside the bounds, ascending.
pub(crate) fn group_window(g: &GroupDesc, b: &Bounds) -> Vec<GroupElem> {
    let mut out = vec![Vec::new()];
    for c in g.coords() {
        let vals = coord_values(c, b);
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                vals.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(GroupElem::new).collect()
}

impl Algebra {
    /// Subgroup of the first factor's group part from which `Mid` elements draw
    /// their first coordinate.
    fn mid_first_sub(&self) -> SubgroupDesc {
        let xg = self.parts().0.gr_desc();
        let ints = SubgroupDesc::Scalar(SubSpec::Index(1));
        match self.node() {
            Node::TypeI { z, .. } => z.clone(),
            Node::TypeIII { v, .. } | Node::TypeIV { v, .. } => v.clone(),
            Node::TypeII { .. } => SubgroupDesc::full(),
            Node::SublexI { z, h, .. } => match h {
                HDesc::FullH => z.clone(),
                HDesc::ProdH(zp, _) => z.meet(zp, xg),
                HDesc::GraphH(_) => z.meet(&ints, xg),
            },
            Node::SublexII { h, .. } => match h {
                HDesc::FullH => SubgroupDesc::full(),
                HDesc::ProdH(zp, _) => zp.clone(),
                HDesc::GraphH(_) => ints,
            },
            Node::GroupLeaf(_) => unreachable!(),
        }
    }

    fn sample_mid(&self, rng: &mut dyn RngCore, b: &Bounds, x: &Elem, hint: Option<&SubgroupDesc>) -> Option<Elem> {
        let y = self.parts().1;
        match self.mid_slice(x) {
            MidSlice::Empty => None,
            MidSlice::Whole => Some(match hint {
                Some(h) => y.sample_gr(rng, b, h),
                None => y.sample_elem(rng, b),
            }),
            MidSlice::Coset { base, sub } => {
                let g = y.leaf_desc()?;
                let s = hint.map_or(sub.clone(), |h| sub.meet(h, g));
                let d = sample_group(rng, g, &s, b);
                Some(Elem::Leaf(GroupElem::new(base.coords.iter().zip(&d.coords).map(|(p, q)| p + q).collect())))
            }
        }
    }

    /// A random valid element. Product nodes first choose the marker:
    /// top and bottom with probability 1/4 each, a middle element otherwise.
    pub fn sample_elem(&self, rng: &mut dyn RngCore, b: &Bounds) -> Elem {
        let Node::GroupLeaf(g) = self.node() else {
            let a = self.parts().0;
            let kind = rng.gen_range(0..4);
            let fam = self.family().unwrap();
            if kind >= 2 {
                let x = a.sample_gr(rng, b, &self.mid_first_sub());
                if let Some(y) = self.sample_mid(rng, b, &x, None) {
                    let e = Elem::mid(x.clone(), y);
                    if self.is_valid_elem(&e) {
                        return e;
                    }
                }
                return match fam {
                    Family::I => Elem::bot(x),
                    Family::II => Elem::top(x),
                };
            }
            return match (fam, kind) {
                (Family::I, 0) => {
                    let x = a.sample_gr(rng, b, self.z().unwrap());
                    if self.top_allowed(&x) {
                        Elem::top(x)
                    } else {
                        Elem::bot(x)
                    }
                }
                (Family::I, _) => Elem::bot(a.sample_elem(rng, b)),
                (Family::II, _) => Elem::top(a.sample_elem(rng, b)),
            };
        };
        Elem::Leaf(sample_group(rng, g, &SubgroupDesc::full(), b))
    }

    /// A random invertible element, aiming for coordinates in `s`; falls back
    /// to the unit after a few rejected draws.
    pub fn sample_gr(&self, rng: &mut dyn RngCore, b: &Bounds, s: &SubgroupDesc) -> Elem {
        if let Node::GroupLeaf(g) = self.node() {
            return Elem::Leaf(sample_group(rng, g, s, b));
        }
        let a = self.parts().0;
        let (sx, sy) = s.split(a.gr_desc().dims());
        let first = sx.meet(&self.mid_first_sub(), a.gr_desc());
        for _ in 0..8 {
            let x = a.sample_gr(rng, b, &first);
            if let Some(y) = self.sample_mid(rng, b, &x, Some(&sy)) {
                let e = Elem::mid(x, y);
                if self.is_valid_elem(&e) && self.in_sub(&e, s) {
                    return e;
                }
            }
        }
        self.unit_ref().clone()
    }

    /// Every valid element whose coordinates lie in the bounds, ascending.
    pub fn window_elems(&self, b: &Bounds) -> Vec<Elem> {
        match self.node() {
            Node::GroupLeaf(g) => group_window(g, b).into_iter().map(Elem::Leaf).collect(),
            _ => {
                let (a, y) = self.parts();
                let ys = y.window_elems(b);
                let mut out = Vec::new();
                for x in a.window_elems(b) {
                    if self.bot_allowed() {
                        out.push(Elem::bot(x.clone()));
                    }
                    let slice = self.mid_slice(&x);
                    if slice != MidSlice::Empty {
                        for v in &ys {
                            if slice_contains(y, &slice, v) {
                                out.push(Elem::mid(x.clone(), v.clone()));
                            }
                        }
                    }
                    if self.top_allowed(&x) {
                        out.push(Elem::top(x));
                    }
                }
                out
            }
        }
    }
}
