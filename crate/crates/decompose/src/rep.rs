use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use chain_core::{Algebra, Chain, Elem, Family, HDesc, MidSlice};
use loag::{Coord, GroupDesc, GroupElem, Rational, SubSpec, SubgroupDesc};
use plex::{build_sublex, SublexKind, SyntaxError, Tokens};

use crate::{Branch, DecomposeError, ElemClass, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Iota {
    I,
    II,
}

/// The subgroup controlling tops at a level: an explicit subgroup for
/// type I levels, the whole group part for type II.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelZ {
    Sub(SubgroupDesc),
    Gr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub iota: Iota,
    pub z: LevelZ,
    pub g: GroupDesc,
    pub h: HDesc,
}

/// A base group and the sublex levels stacked on it, innermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTree {
    pub base: GroupDesc,
    pub levels: Vec<Level>,
}

impl RepTree {
    /// Number of groups, which is the number of positive idempotents.
    pub fn group_count(&self) -> usize {
        self.levels.len() + 1
    }

    /// Group part of the rebuilt algebra, coordinate by coordinate.
    pub fn gr_desc(&self) -> GroupDesc {
        let mut cs = self.base.coords();
        for l in &self.levels {
            cs.extend(l.g.coords());
        }
        GroupDesc::from_coords(cs)
    }

    /// The full lex product with adjoined bounds that the chain embeds into
    /// as a monoid, e.g. `Z lex Q^TB`.
    pub fn lex_target(&self) -> String {
        let mut s = self.base.to_string();
        for l in &self.levels {
            s.push_str(&format!(" lex {}^TB", l.g));
        }
        s
    }

    pub fn parse(text: &str) -> Result<RepTree, SyntaxError> {
        let mut t = Tokens::new(text)?;
        t.keyword("base")?;
        t.punct(':')?;
        let base = t.group()?;
        let mut levels = Vec::new();
        while !t.at_end() {
            t.keyword("level")?;
            let want = (levels.len() + 2).to_string();
            let at = t.clone();
            let n = t.number()?;
            if n != want {
                return Err(at.error(format!("expected level {want}, got {n}")));
            }
            t.punct(':')?;
            t.keyword("iota")?;
            t.punct('=')?;
            let iota = match t.ident()?.as_str() {
                "I" => Iota::I,
                "II" => Iota::II,
                other => return Err(t.error(format!("expected I or II, got '{other}'"))),
            };
            t.keyword("Z")?;
            t.punct('=')?;
            let save = t.clone();
            let z = match t.ident() {
                Ok(s) if s == "gr" => LevelZ::Gr,
                _ => {
                    t = save;
                    LevelZ::Sub(t.sub()?)
                }
            };
            t.keyword("G")?;
            t.punct('=')?;
            let g = t.group()?;
            t.keyword("H")?;
            t.punct('=')?;
            let h = t.h()?;
            levels.push(Level { iota, z, g, h });
        }
        Ok(RepTree { base, levels })
    }
}

impl FromStr for RepTree {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<RepTree, SyntaxError> {
        RepTree::parse(s)
    }
}

impl fmt::Display for Iota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Iota::I => "I",
            Iota::II => "II",
        })
    }
}

impl fmt::Display for LevelZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelZ::Sub(s) => write!(f, "{s}"),
            LevelZ::Gr => f.write_str("gr"),
        }
    }
}

impl fmt::Display for RepTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base: {}", self.base)?;
        for (i, l) in self.levels.iter().enumerate() {
            write!(f, "\nlevel {}: iota={} Z={} G={} H={}", i + 2, l.iota, l.z, l.g, l.h)?;
        }
        Ok(())
    }
}

/// Re-express a subgroup of `from` in the coordinates of `to`, which has the
/// same number of coordinates, each equal to the old one, its hull, or `1`.
fn transport(s: &SubgroupDesc, from: &GroupDesc, to: &GroupDesc) -> SubgroupDesc {
    let specs = s.normalize(from);
    let v = from
        .coords()
        .into_iter()
        .zip(to.coords())
        .zip(specs)
        .map(|((a, b), sp)| match (a, b, sp) {
            (_, Coord::Triv, _) => SubSpec::Trivial,
            (Coord::Int, Coord::Rat, SubSpec::Full) => SubSpec::Index(1),
            (_, _, sp) => sp,
        })
        .collect();
    SubgroupDesc::Coords(v).compact()
}

/// Divisible hull of the kernel subgroup, with `1` where it is trivial.
fn ker_hull(y: &GroupDesc, ker: &SubgroupDesc) -> GroupDesc {
    let specs = ker.normalize(y);
    GroupDesc::from_coords(
        y.coords()
            .into_iter()
            .zip(specs)
            .map(|(c, s)| if s == SubSpec::Trivial { Coord::Triv } else { c.hull() })
            .collect(),
    )
}

fn unsupported(a: &Algebra, why: &str) -> DecomposeError {
    DecomposeError::Unsupported(format!("{a}: {why}"))
}

/// Kernel subgroup: the second coordinates over the unit of the first factor.
fn ker_of(a: &Algebra, x: &Algebra) -> Result<SubgroupDesc, DecomposeError> {
    match a.mid_slice(x.unit_ref()) {
        MidSlice::Whole => Ok(SubgroupDesc::full()),
        MidSlice::Coset { sub, .. } => Ok(sub),
        MidSlice::Empty => Err(unsupported(a, "empty kernel")),
    }
}

fn level_of(
    a: &Algebra,
    step: &Step<&Algebra>,
    x: &Algebra,
    y: &GroupDesc,
    new_xg: &GroupDesc,
) -> Result<Level, DecomposeError> {
    let iota = match (step.branch(), a.family()) {
        (Branch::Idem, Some(Family::I)) => Iota::I,
        (Branch::NonIdem, Some(Family::II)) => Iota::II,
        _ => return Err(unsupported(a, "branch and product shape disagree")),
    };
    let g = ker_hull(y, &ker_of(a, x)?);
    let xg = x.gr_desc();
    let xs = x.gr_sub().ok_or_else(|| unsupported(a, "first factor has a graph-shaped group part"))?;
    let reference = match iota {
        Iota::I => a.z().ok_or_else(|| unsupported(a, "missing Z"))?.meet(xs, xg),
        Iota::II => xs.clone(),
    };
    let (head, tail) = match (a.gr_sub(), a.h()) {
        (Some(s), _) => {
            let (h, t) = s.split(xg.dims());
            (h, transport(&t, y, &g))
        }
        (None, Some(HDesc::GraphH(_))) => {
            (SubgroupDesc::Scalar(SubSpec::Index(1)).meet(&reference, xg), SubgroupDesc::full())
        }
        (None, _) => return Err(unsupported(a, "group part has no product form")),
    };
    let h = if head.same(&reference, xg) && tail.is_full(&g) {
        HDesc::FullH
    } else {
        HDesc::ProdH(transport(&head, xg, new_xg), tail)
    };
    let z = match iota {
        Iota::I => LevelZ::Sub(transport(&reference, xg, new_xg)),
        Iota::II => LevelZ::Gr,
    };
    Ok(Level { iota, z, g, h })
}

/// Group representation of a chain whose construction tree has group leaves
/// as second factors all along the first-factor spine.
pub fn group_representation(a: &Algebra) -> Result<RepTree, DecomposeError> {
    let Some((x, y)) = a.factors() else {
        return Ok(RepTree { base: a.gr_desc().clone(), levels: Vec::new() });
    };
    let yg = y.leaf_desc().ok_or_else(|| unsupported(a, "second factor is not a group"))?;
    let step = Step::new(a)?;
    if a.positive_idempotents().len() != x.positive_idempotents().len() + 1 {
        return Err(unsupported(a, "idempotent count does not drop by one"));
    }
    let mut tree = group_representation(x)?;
    let level = level_of(a, &step, x, yg, &tree.gr_desc())?;
    tree.levels.push(level);
    Ok(tree)
}

pub fn rebuild(t: &RepTree) -> Result<Algebra, DecomposeError> {
    let mut a = Algebra::group(t.base.clone());
    for l in &t.levels {
        let y = Arc::new(Algebra::group(l.g.clone()));
        let x = Arc::new(a);
        a = match (l.iota, &l.z) {
            (Iota::I, LevelZ::Sub(z)) => build_sublex(SublexKind::I, x, Some(z.clone()), y, l.h.clone())?,
            (Iota::II, LevelZ::Gr) => build_sublex(SublexKind::II, x, None, y, l.h.clone())?,
            _ => {
                return Err(DecomposeError::Unsupported(format!(
                    "level with iota={} needs {}",
                    l.iota,
                    if l.iota == Iota::I { "an explicit Z" } else { "Z=gr" }
                )))
            }
        };
    }
    Ok(a)
}

#[derive(Debug, Clone)]
struct NodeMap<'a> {
    alg: &'a Algebra,
    step: Option<Step<&'a Algebra>>,
    g: GroupDesc,
    xdims: usize,
}

/// The composed embedding of a chain into the algebra rebuilt from its
/// group representation.
#[derive(Debug, Clone)]
pub struct Embedding<'a> {
    nodes: Vec<NodeMap<'a>>,
}

impl<'a> Embedding<'a> {
    pub fn new(a: &'a Algebra) -> Result<Embedding<'a>, DecomposeError> {
        let mut nodes = Vec::new();
        let mut cur = a;
        while let Some((x, y)) = cur.factors() {
            let yg = y.leaf_desc().ok_or_else(|| unsupported(cur, "second factor is not a group"))?;
            let g = ker_hull(yg, &ker_of(cur, x)?);
            nodes.push(NodeMap { alg: cur, step: Some(Step::new(cur)?), g, xdims: x.gr_desc().dims() });
            cur = x;
        }
        nodes.push(NodeMap { alg: cur, step: None, g: GroupDesc::Triv, xdims: 0 });
        Ok(Embedding { nodes })
    }

    pub fn source(&self) -> &'a Algebra {
        self.nodes[0].alg
    }

    pub fn apply(&self, x: &Elem) -> Result<Elem, DecomposeError> {
        if !self.source().is_valid(x) {
            return Err(DecomposeError::InvalidElement(x.to_string()));
        }
        Ok(self.apply_at(0, x))
    }

    fn apply_at(&self, i: usize, x: &Elem) -> Elem {
        let n = &self.nodes[i];
        let Some(step) = &n.step else {
            return x.clone();
        };
        let first = |e: &Elem| e.first().expect("product element").clone();
        if step.below(x) {
            let f = match step.branch() {
                Branch::Idem => first(x),
                Branch::NonIdem => first(&step.top_of(x)),
            };
            return Elem::mid(self.apply_at(i + 1, &f), Elem::Leaf(self.zeta(n, x)));
        }
        match step.branch() {
            Branch::Idem => {
                let c = step.gamma_canonical(x);
                let f = self.apply_at(i + 1, &first(&c));
                match step.classify(x) {
                    ElemClass::TopC | ElemClass::TopPs => Elem::top(f),
                    _ => Elem::bot(f),
                }
            }
            Branch::NonIdem => Elem::top(self.apply_at(i + 1, &first(x))),
        }
    }

    /// Kernel coordinate: offset of `x` from the canonical point of its
    /// component, inside the kernel hull.
    fn zeta(&self, n: &NodeMap<'_>, x: &Elem) -> GroupElem {
        let rep = n.alg.canonical_rep(x).unwrap_or_else(|| x.clone());
        let (Some(gx), Some(gr)) = (n.alg.gr_coords(x), n.alg.gr_coords(&rep)) else {
            return n.g.zero();
        };
        let (_, tx) = gx.split_at(n.xdims);
        let (_, tr) = gr.split_at(n.xdims);
        let zero = Rational::from_integer(0.into());
        GroupElem::new(
            n.g.coords()
                .into_iter()
                .zip(tx.coords.iter().zip(&tr.coords))
                .map(|(c, (p, q))| if c == Coord::Triv { zero.clone() } else { p - q })
                .collect(),
        )
    }
}
