//! Symbolic graph descriptors and the canonical graphs they denote.

use std::fmt;

use crate::corona::{iterated_corona_with_limit, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{complement, disjoint_union, join, Graph, Vertex};

/// A graph family, or an operation combining descriptors.
///
/// `Display` prints the expression syntax accepted by [`crate::expr::parse`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Fan(usize),
    Join(Box<Family>, Box<Family>),
    Union(Box<Family>, Box<Family>),
    Complement(Box<Family>),
    Corona(Box<Family>, Box<Family>, u32),
    /// An explicit graph given by order and edge list.
    Explicit(usize, Vec<(Vertex, Vertex)>),
}

impl Family {
    pub fn join(a: Family, b: Family) -> Family {
        Family::Join(Box::new(a), Box::new(b))
    }

    pub fn union(a: Family, b: Family) -> Family {
        Family::Union(Box::new(a), Box::new(b))
    }

    pub fn complement(a: Family) -> Family {
        Family::Complement(Box::new(a))
    }

    pub fn corona(g: Family, h: Family, k: u32) -> Family {
        Family::Corona(Box::new(g), Box::new(h), k)
    }

    pub fn explicit(g: &Graph) -> Family {
        Family::Explicit(g.order(), g.edges().collect())
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::CompleteBipartite(..) => "kst",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Fan(_) => "fan",
            Family::Join(..) => "join",
            Family::Union(..) => "union",
            Family::Complement(_) => "complement",
            Family::Corona(..) => "corona",
            Family::Explicit(..) => "graph",
        }
    }

    /// Checks the minimum-order constraint of every node in the tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidDescriptor(what));
        match self {
            Family::Path(n) if *n < 1 => bad(format!("path({n}) needs at least 1 vertex")),
            Family::Cycle(n) if *n < 3 => bad(format!("cycle({n}) needs at least 3 vertices")),
            Family::Complete(n) if *n < 1 => bad(format!("complete({n}) needs at least 1 vertex")),
            Family::CompleteBipartite(s, t) if *s < 1 || *t < 1 => {
                bad(format!("kst({s}, {t}) needs both parts non-empty"))
            }
            Family::Star(n) if *n < 1 => bad(format!("star({n}) needs at least 1 leaf")),
            Family::Wheel(n) if *n < 3 => bad(format!("wheel({n}) needs a rim of at least 3")),
            Family::Fan(n) if *n < 1 => bad(format!("fan({n}) needs a path of at least 1")),
            Family::Join(a, b) | Family::Union(a, b) => {
                a.validate()?;
                b.validate()
            }
            Family::Complement(a) => a.validate(),
            Family::Corona(g, h, k) => {
                if *k < 1 {
                    return bad("corona iteration count must be at least 1".into());
                }
                g.validate()?;
                h.validate()
            }
            _ => Ok(()),
        }
    }

    /// Builds the canonical labeled graph with the default order limit.
    pub fn build(&self) -> Result<Graph> {
        self.build_with_limit(DEFAULT_MAX_ORDER)
    }

    pub fn build_with_limit(&self, max_order: usize) -> Result<Graph> {
        self.validate()?;
        self.build_unchecked(max_order)
    }

    fn build_unchecked(&self, max_order: usize) -> Result<Graph> {
        let g = match self {
            Family::Path(n) => Graph::from_valid_edges(*n, (1..*n).map(|i| (i - 1, i))),
            Family::Cycle(n) => Graph::from_valid_edges(*n, (0..*n).map(|i| (i, (i + 1) % *n)).collect::<Vec<_>>()),
            Family::Complete(n) => complement(&Graph::edgeless(*n)),
            Family::Empty(n) => Graph::edgeless(*n),
            Family::CompleteBipartite(s, t) => join(&Graph::edgeless(*s), &Graph::edgeless(*t)),
            Family::Star(n) => join(&Graph::edgeless(1), &Graph::edgeless(*n)),
            Family::Wheel(n) => join(&Graph::edgeless(1), &Family::Cycle(*n).build_unchecked(max_order)?),
            Family::Fan(n) => join(&Graph::edgeless(1), &Family::Path(*n).build_unchecked(max_order)?),
            Family::Join(a, b) => join(&a.build_unchecked(max_order)?, &b.build_unchecked(max_order)?),
            Family::Union(a, b) => disjoint_union(&a.build_unchecked(max_order)?, &b.build_unchecked(max_order)?),
            Family::Complement(a) => complement(&a.build_unchecked(max_order)?),
            Family::Corona(g, h, k) => {
                let g = g.build_unchecked(max_order)?;
                let h = h.build_unchecked(max_order)?;
                iterated_corona_with_limit(&g, &h, *k, max_order)?.0
            }
            Family::Explicit(n, edges) => Graph::from_edges(*n, edges.iter().copied())?,
        };
        if g.order() > max_order {
            return Err(Error::SizeLimit {
                order: g.order() as u128,
                limit: max_order,
            });
        }
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::Fan(n) => write!(f, "{tag}({n})"),
            Family::CompleteBipartite(s, t) => write!(f, "{tag}({s}, {t})"),
            Family::Join(a, b) | Family::Union(a, b) => write!(f, "{tag}({a}, {b})"),
            Family::Complement(a) => write!(f, "{tag}({a})"),
            Family::Corona(g, h, 1) => write!(f, "{tag}({g}, {h})"),
            Family::Corona(g, h, k) => write!(f, "{tag}({g}, {h}, {k})"),
            Family::Explicit(n, edges) => {
                write!(f, "{tag}({n}")?;
                for (u, v) in edges {
                    write!(f, ", {u}, {v}")?;
                }
                write!(f, ")")
            }
        }
    }
}
