//! Built-in diagrams with their known invariant values.

use crate::diagram::StuckDiagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub note: &'static str,
    /// Rendered rigid HOMFLYPT polynomial.
    pub homflypt: Option<&'static str>,
    /// Rendered normalized bracket.
    pub bracket: Option<&'static str>,
}

impl CatalogEntry {
    pub fn diagram(&self) -> StuckDiagram {
        StuckDiagram::parse(self.text).expect("catalog entries parse")
    }
}

const fn entry(
    name: &'static str,
    text: &'static str,
    note: &'static str,
    homflypt: Option<&'static str>,
    bracket: Option<&'static str>,
) -> CatalogEntry {
    CatalogEntry { name, text, note, homflypt, bracket }
}

pub static CATALOG: &[CatalogEntry] = &[
    entry("unknot", "O", "crossingless circle", Some("1"), Some("1")),
    entry("curl-pos", "X[1,2,2,1]", "positive Reidemeister 1 kink", Some("1"), Some("1")),
    entry("curl-neg", "X[1,1,2,2]", "negative Reidemeister 1 kink", Some("1"), Some("1")),
    entry(
        "rigid-curl-pos",
        "S[1,2,2,1]",
        "unknot with one positive stuck crossing",
        Some("t*a*z^-1 - t*a^-1*z^-1 + r"),
        Some("R"),
    ),
    entry(
        "rigid-curl-neg",
        "S[1,1,2,2]",
        "unknot with one negative stuck crossing",
        Some("t*a*z^-1 - t*a^-1*z^-1 + r^-1"),
        Some("R"),
    ),
    entry(
        "trefoil",
        "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
        "right-handed trefoil, writhe +3",
        Some("a^-2*z^2 + 2*a^-2 - a^-4"),
        Some("A^-4 + A^-12 - A^-16"),
    ),
    entry(
        "stuck-trefoil",
        "X[1,4,2,5] S[3,6,4,1] X[5,2,6,3]",
        "trefoil with one stuck crossing",
        Some("t*a^-1*z + t*a^-1*z^-1 - t*a^-3*z^-1 + r*a^-2*z^2 + 2*r*a^-2 - r*a^-4"),
        Some("R*A^-4 + R*A^-6 - R*A^-10"),
    ),
    entry(
        "stuck-trefoil-2",
        "S[1,4,2,5] S[3,6,4,1] X[5,2,6,3]",
        "trefoil with two stuck crossings",
        Some("t^2 + 2*t*r*a^-1*z + 2*t*r*a^-1*z^-1 - 2*t*r*a^-3*z^-1 + r^2*a^-2*z^2 + 2*r^2*a^-2 - r^2*a^-4"),
        Some("-R^2*A^-2 - R^2*A^-4"),
    ),
    entry(
        "hopf",
        "X[4,1,3,2] X[2,3,1,4]",
        "positive Hopf link",
        Some("a^-1*z + a^-1*z^-1 - a^-3*z^-1"),
        Some("-A^-2 - A^-10"),
    ),
    entry(
        "stuck-hopf",
        "S[4,1,3,2] X[2,3,1,4]",
        "Hopf link with one stuck crossing",
        Some("t + r*a^-1*z + r*a^-1*z^-1 - r*a^-3*z^-1"),
        Some("-R*A^-2 - R*A^-4"),
    ),
    entry(
        "figure-eight",
        "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
        "figure-eight knot 4_1",
        Some("a^2 - z^2 - 1 + a^-2"),
        Some("A^8 - A^4 + 1 - A^-4 + A^-8"),
    ),
    entry(
        "cinquefoil",
        "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]",
        "torus knot 5_1",
        Some("a^-4*z^4 + 4*a^-4*z^2 + 3*a^-4 - a^-6*z^2 - 2*a^-6"),
        Some("A^-8 + A^-16 - A^-20 + A^-24 - A^-28"),
    ),
    entry(
        "three-twist",
        "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
        "twist knot 5_2",
        Some("a^-2*z^2 + a^-2 + a^-4*z^2 + a^-4 - a^-6"),
        Some("A^-4 - A^-8 + 2*A^-12 - A^-16 + A^-20 - A^-24"),
    ),
    entry(
        "stevedore",
        "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]",
        "stevedore knot 6_1",
        Some("a^2 - z^2 - a^-2*z^2 - a^-2 + a^-4"),
        Some("A^8 - A^4 + 2 - 2*A^-4 + A^-8 - A^-12 + A^-16"),
    ),
    entry(
        "septafoil",
        "X[1,8,2,9] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] X[9,2,10,3] X[11,4,12,5] X[13,6,14,7]",
        "torus knot 7_1",
        Some("a^-6*z^6 + 6*a^-6*z^4 + 10*a^-6*z^2 + 4*a^-6 - a^-8*z^4 - 4*a^-8*z^2 - 3*a^-8"),
        Some("A^-12 + A^-20 - A^-24 + A^-28 - A^-32 + A^-36 - A^-40"),
    ),
    entry("unlink-2", "O O", "two-component unlink", Some("a*z^-1 - a^-1*z^-1"), Some("-A^2 - A^-2")),
    entry(
        "trefoil-unknot",
        "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O",
        "split union of a trefoil and a circle",
        Some("a^-1*z + 2*a^-1*z^-1 - a^-3*z - 3*a^-3*z^-1 + a^-5*z^-1"),
        Some("-A^-2 - A^-6 - A^-10 + A^-18"),
    ),
    entry("r2-unknot", "X[4,1,1,2] X[3,3,4,2]", "two-crossing unknot with a cancelling bigon", Some("1"), Some("1")),
    entry(
        "half-rigid-r2",
        "S[4,1,1,2] X[3,3,4,2]",
        "cancelling bigon with exactly one stuck crossing",
        Some("t*a*z^-1 - t*a^-1*z^-1 + r"),
        Some("R"),
    ),
    entry(
        "rigid-r2",
        "S[4,1,1,2] S[3,3,4,2]",
        "cancelling bigon with both crossings stuck",
        Some("t^2*a^2*z^-2 - 2*t^2*z^-2 + t^2*a^-2*z^-2 + t*r*a*z^-1 - t*r*a^-1*z^-1 + t*r^-1*a*z^-1 - t*r^-1*a^-1*z^-1 + 1"),
        Some("R^2"),
    ),
    entry(
        "rigid-twists-1",
        "S[1,2,2,1]",
        "unknot with one rigid twist",
        Some("t*a*z^-1 - t*a^-1*z^-1 + r"),
        Some("R"),
    ),
    entry(
        "rigid-twists-2",
        "S[1,2,2,3] S[3,4,4,1]",
        "unknot with two rigid twists in disjoint disks",
        Some("t^2*a^2*z^-2 - 2*t^2*z^-2 + t^2*a^-2*z^-2 + 2*t*r*a*z^-1 - 2*t*r*a^-1*z^-1 + r^2"),
        Some("R^2"),
    ),
    entry(
        "rigid-twists-3",
        "S[1,2,2,3] S[3,4,4,5] S[5,6,6,1]",
        "unknot with three rigid twists in disjoint disks",
        Some(
            "t^3*a^3*z^-3 - 3*t^3*a*z^-3 + 3*t^3*a^-1*z^-3 - t^3*a^-3*z^-3 + 3*t^2*r*a^2*z^-2 - 6*t^2*r*z^-2 \
             + 3*t^2*r*a^-2*z^-2 + 3*t*r^2*a*z^-1 - 3*t*r^2*a^-1*z^-1 + r^3",
        ),
        Some("R^3"),
    ),
];

pub fn entries() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_and_names_are_unique() {
        let mut names = std::collections::HashSet::new();
        for e in entries() {
            assert!(names.insert(e.name), "{}", e.name);
            e.diagram();
        }
        assert_eq!(lookup("unknot").unwrap().text, "O");
        assert_eq!(lookup("rigid-curl-pos").unwrap().text, "S[1,2,2,1]");
        assert_eq!(lookup("trefoil").unwrap().diagram().writhe(), 3);
        assert!(matches!(lookup("nope"), Err(Error::UnknownEntry(_))));
    }
}
