//! Parametric graph generators: basic families and the extremal witnesses
//! that attain the closed-form bounds.
//!
//! Component order is fixed (special component first, then triangle blocks,
//! then edge blocks) so the graph6 output of a family is deterministic.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("cycle needs at least 3 vertices, got {n}")]
    CycleTooShort { n: usize },
    #[error("{family} needs n >= {min}, got {n}")]
    NTooSmall { family: &'static str, n: usize, min: usize },
    #[error("g_extremal needs 0 <= 3t <= n, got t = {t}, n = {n}")]
    TriangleBudget { t: usize, n: usize },
    #[error("g_extremal with t = 0 and odd n needs n >= 5, got n = {n}")]
    OddCaseTooSmall { n: usize },
    #[error("family {family} takes no t parameter")]
    UnexpectedT { family: &'static str },
    #[error("family {family} requires a t parameter")]
    MissingT { family: &'static str },
    #[error("the alternative witness exists only for n = 1 (mod 3), got n = {n}")]
    NoAlternative { n: usize },
    #[error("unknown family name: {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The cycle `C_n`, `n >= 3`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooShort { n });
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?)
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::from_edges(n, crate::graph::upper_triangle_pairs(n))?)
}

/// `k` disjoint edges on `2k` vertices.
pub fn matching(k: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))?)
}

fn assemble(special: Option<Graph>, triangles: usize, edges: usize) -> Result<Graph, FamilyError> {
    let mut g = special.unwrap_or(Graph::edgeless(0)?);
    for _ in 0..triangles {
        g = g.disjoint_union(&complete(3)?)?;
    }
    if edges > 0 {
        g = g.disjoint_union(&matching(edges)?)?;
    }
    Ok(g)
}

/// The extremal graph for the unrestricted maximum: disjoint triangles with a
/// `K_4` or `K_2` absorbing the residue of `n` mod 3.
pub fn moon_moser(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::NTooSmall { family: "moon_moser", n, min: 3 });
    }
    match n % 3 {
        0 => assemble(None, n / 3, 0),
        1 => assemble(Some(complete(4)?), (n - 4) / 3, 0),
        _ => assemble(None, (n - 2) / 3, 1),
    }
}

/// The alternative extremal witness for `n = 1 (mod 3)`: two disjoint edges
/// instead of the `K_4`. Ties the same count.
pub fn moon_moser_alt(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::NTooSmall { family: "moon_moser", n, min: 3 });
    }
    if n % 3 != 1 {
        return Err(FamilyError::NoAlternative { n });
    }
    assemble(None, (n - 4) / 3, 2)
}

/// The triangle-free extremal graph: a perfect matching, with a pentagon
/// absorbing odd `n`.
pub fn hujter_tuza(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(FamilyError::NTooSmall { family: "hujter_tuza", n, min: 4 });
    }
    if n.is_multiple_of(2) {
        assemble(None, 0, n / 2)
    } else {
        assemble(Some(cycle(5)?), 0, (n - 5) / 2)
    }
}

/// The witness attaining the bound for graphs with no induced triangle
/// matching of size `t + 1`: `t` triangles padded with disjoint edges when
/// `n - 3t` is even, one triangle traded for edges when odd, and the pentagon
/// form when `t = 0` and `n` is odd.
pub fn g_extremal(t: usize, n: usize) -> Result<Graph, FamilyError> {
    if 3 * t > n {
        return Err(FamilyError::TriangleBudget { t, n });
    }
    let m = n - 3 * t;
    if m.is_multiple_of(2) {
        assemble(None, t, m / 2)
    } else if t > 0 {
        assemble(None, t - 1, (m + 3) / 2)
    } else if n >= 5 {
        assemble(Some(cycle(5)?), 0, (n - 5) / 2)
    } else {
        Err(FamilyError::OddCaseTooSmall { n })
    }
}

/// A parsed family request, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub t: Option<usize>,
    /// Selects the alternative witness where one exists.
    pub alt: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    MoonMoser,
    HujterTuza,
    GExtremal,
    Cycle,
    Complete,
    Matching,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::MoonMoser => "moon_moser",
            FamilyKind::HujterTuza => "hujter_tuza",
            FamilyKind::GExtremal => "g_extremal",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Matching => "matching",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "moon_moser" => Ok(FamilyKind::MoonMoser),
            "hujter_tuza" => Ok(FamilyKind::HujterTuza),
            "g_extremal" => Ok(FamilyKind::GExtremal),
            "cycle" => Ok(FamilyKind::Cycle),
            "complete" => Ok(FamilyKind::Complete),
            "matching" => Ok(FamilyKind::Matching),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FamilySpec {
    /// Builds the requested graph. For `matching`, `n` is the number of
    /// edges, matching the generator's parameter.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        let reject_t = |family| match self.t {
            Some(_) => Err(FamilyError::UnexpectedT { family }),
            None => Ok(()),
        };
        match self.kind {
            FamilyKind::Cycle => {
                reject_t("cycle")?;
                cycle(self.n)
            }
            FamilyKind::Complete => {
                reject_t("complete")?;
                complete(self.n)
            }
            FamilyKind::Matching => {
                reject_t("matching")?;
                matching(self.n)
            }
            FamilyKind::MoonMoser => {
                reject_t("moon_moser")?;
                if self.alt {
                    moon_moser_alt(self.n)
                } else {
                    moon_moser(self.n)
                }
            }
            FamilyKind::HujterTuza => {
                reject_t("hujter_tuza")?;
                hujter_tuza(self.n)
            }
            FamilyKind::GExtremal => {
                let t = self.t.ok_or(FamilyError::MissingT { family: "g_extremal" })?;
                g_extremal(t, self.n)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{bounds, mis};
    use num_bigint::BigUint;

    #[test]
    fn basic_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert_eq!(mis::count(&c5), BigUint::from(5u32));

        let k4 = complete(4).unwrap();
        assert_eq!(mis::count(&k4), BigUint::from(4u32));

        let m3 = matching(3).unwrap();
        assert_eq!((m3.n(), m3.edge_count()), (6, 3));
        assert_eq!(mis::count(&m3), BigUint::from(8u32));

        assert_eq!(cycle(2), Err(FamilyError::CycleTooShort { n: 2 }));
    }

    #[test]
    fn moon_moser_attains_the_maximum() {
        for (n, expect) in [(6, 9u32), (7, 12), (5, 6)] {
            let g = moon_moser(n).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(mis::count(&g), BigUint::from(expect));
            assert_eq!(mis::count(&g), bounds::mis_max(n).unwrap());
        }
        assert!(moon_moser(2).is_err());
    }

    #[test]
    fn moon_moser_alternative_ties() {
        for n in [7, 10, 13] {
            let alt = moon_moser_alt(n).unwrap();
            assert_eq!(alt.n(), n);
            assert_eq!(mis::count(&alt), mis::count(&moon_moser(n).unwrap()));
        }
        assert_eq!(moon_moser_alt(6), Err(FamilyError::NoAlternative { n: 6 }));
    }

    #[test]
    fn hujter_tuza_attains_the_triangle_free_maximum() {
        for (n, expect) in [(8, 16u32), (7, 10), (5, 5), (4, 4)] {
            let g = hujter_tuza(n).unwrap();
            assert_eq!(g.n(), n);
            assert!(crate::metrics::is_triangle_free(&g));
            assert_eq!(mis::count(&g), BigUint::from(expect));
            assert_eq!(mis::count(&g), bounds::mis_triangle_free_max(n).unwrap());
        }
        assert!(hujter_tuza(3).is_err());
    }

    #[test]
    fn g_extremal_cases() {
        // even residue: t triangles + edges
        let g = g_extremal(2, 10).unwrap();
        assert_eq!(mis::count(&g), BigUint::from(36u32));
        assert_eq!(crate::metrics::triangle_matching_number(&g), 2);
        // odd residue with t > 0 trades one triangle for edges
        let g = g_extremal(1, 6).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(mis::count(&g), BigUint::from(8u32));
        // odd residue, t = 0: pentagon plus edges
        let g = g_extremal(0, 9).unwrap();
        assert_eq!(mis::count(&g), BigUint::from(20u32));

        assert_eq!(g_extremal(2, 5), Err(FamilyError::TriangleBudget { t: 2, n: 5 }));
        assert_eq!(g_extremal(0, 3), Err(FamilyError::OddCaseTooSmall { n: 3 }));
    }

    #[test]
    fn component_order_is_deterministic() {
        // Special component first, then triangles, then edges.
        let g = g_extremal(0, 9).unwrap();
        let comps = g.components();
        assert_eq!(comps[0].len(), 5);
        assert_eq!(comps[1].len(), 2);
        let g = moon_moser(7).unwrap();
        assert_eq!(g.components()[0].len(), 4);
        assert_eq!(crate::graph6::encode(&g), crate::graph6::encode(&moon_moser(7).unwrap()));
    }

    #[test]
    fn family_spec_dispatch() {
        let spec = FamilySpec { kind: FamilyKind::GExtremal, n: 10, t: Some(2), alt: false };
        assert_eq!(spec.build().unwrap(), g_extremal(2, 10).unwrap());
        let spec = FamilySpec { kind: FamilyKind::Cycle, n: 5, t: Some(1), alt: false };
        assert_eq!(spec.build(), Err(FamilyError::UnexpectedT { family: "cycle" }));
        let spec = FamilySpec { kind: FamilyKind::GExtremal, n: 10, t: None, alt: false };
        assert_eq!(spec.build(), Err(FamilyError::MissingT { family: "g_extremal" }));
        assert_eq!("moon_moser".parse::<FamilyKind>().unwrap(), FamilyKind::MoonMoser);
        assert!("petersen".parse::<FamilyKind>().is_err());
    }
}
