//! Builtin diagrams and the search corpus.
//!
//! The corpus is generated from a few planar link shadows (the one-crossing
//! curl, the Hopf, trefoil and figure-eight shadows and the four-crossing
//! two-component torus shadow). Each crossing of a shadow is kept, switched
//! (the other strand passes over) or made virtual, so every corpus entry is
//! a genuine planar virtual diagram with at most four crossings.

use crate::diagram::{CrossingKind, Diagram, Item};

/// A shadow crossing: strand A runs `a_in -> a_out`, strand B runs
/// `b_in -> b_out`; `positive` is the sign when A passes under B.
struct ShadowCrossing {
    a: (&'static str, &'static str),
    b: (&'static str, &'static str),
    positive: bool,
}

const fn x(
    a_in: &'static str,
    a_out: &'static str,
    b_in: &'static str,
    b_out: &'static str,
    positive: bool,
) -> ShadowCrossing {
    ShadowCrossing {
        a: (a_in, a_out),
        b: (b_in, b_out),
        positive,
    }
}

struct Shadow {
    name: &'static str,
    crossings: &'static [ShadowCrossing],
}

const SHADOWS: &[Shadow] = &[
    Shadow {
        name: "curl",
        crossings: &[x("s", "t", "t", "s", true)],
    },
    Shadow {
        name: "hopf",
        crossings: &[x("b1", "b2", "a1", "a2", true), x("a2", "a1", "b2", "b1", true)],
    },
    Shadow {
        name: "trefoil",
        crossings: &[
            x("e1", "e2", "e4", "e5", false),
            x("e3", "e4", "e6", "e1", false),
            x("e5", "e6", "e2", "e3", false),
        ],
    },
    Shadow {
        name: "figure8",
        crossings: &[
            x("e4", "e5", "e1", "e2", true),
            x("e8", "e1", "e5", "e6", true),
            x("e6", "e7", "e3", "e4", false),
            x("e2", "e3", "e7", "e8", false),
        ],
    },
    Shadow {
        name: "torus24",
        crossings: &[
            x("f2", "f3", "e1", "e2", true),
            x("f4", "f1", "e3", "e4", true),
            x("e2", "e3", "f1", "f2", true),
            x("e4", "e1", "f3", "f4", true),
        ],
    },
];

/// How a shadow crossing is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Resolution {
    Keep,
    Switch,
    Virtual,
}

impl Resolution {
    const ALL: [Resolution; 3] = [Resolution::Keep, Resolution::Switch, Resolution::Virtual];

    fn code(self) -> char {
        match self {
            Resolution::Keep => 'o',
            Resolution::Switch => 's',
            Resolution::Virtual => 'v',
        }
    }
}

fn resolve(shadow: &Shadow, choice: &[Resolution]) -> Diagram {
    let items = shadow
        .crossings
        .iter()
        .zip(choice)
        .map(|(c, r)| {
            let sign = |pos: bool| {
                if pos {
                    CrossingKind::Positive
                } else {
                    CrossingKind::Negative
                }
            };
            let (kind, first, second) = match r {
                Resolution::Keep => (sign(c.positive), c.a, c.b),
                Resolution::Switch => (sign(!c.positive), c.b, c.a),
                Resolution::Virtual => (CrossingKind::Virtual, c.a, c.b),
            };
            Item::Crossing {
                kind,
                slots: [first.0, first.1, second.0, second.1].map(str::to_string),
            }
        })
        .collect();
    let code: String = choice.iter().map(|r| r.code()).collect();
    Diagram::new(format!("{}:{code}", shadow.name), items).expect("shadow wiring is valid")
}

fn all_resolutions(shadow: &Shadow) -> Vec<Diagram> {
    let m = shadow.crossings.len();
    let mut out = Vec::new();
    let mut choice = vec![Resolution::Keep; m];
    for code in 0..3usize.pow(m as u32) {
        let mut c = code;
        for slot in choice.iter_mut().rev() {
            *slot = Resolution::ALL[c % 3];
            c /= 3;
        }
        out.push(resolve(shadow, &choice));
    }
    out
}

const NAMED: &[(&str, &str)] = &[
    ("unknot", "O s\n"),
    ("unlink2", "O a\nO b\n"),
    ("kinked-unknot", "C+ s t t s\n"),
    ("kinked-unknot-negative", "C- s t t s\n"),
    ("two-kink-unknot", "C+ s t t u\nC+ u v v s\n"),
    // component a is listed first so it is component 0
    ("vhopf", "V a2 a1 b2 b1\nC+ b1 b2 a1 a2\n"),
    ("hopf", "C+ b1 b2 a1 a2\nC+ a2 a1 b2 b1\n"),
    ("trefoil", "C- e1 e2 e4 e5\nC- e3 e4 e6 e1\nC- e5 e6 e2 e3\n"),
    ("virtual-trefoil", "C- e1 e2 e4 e5\nC- e3 e4 e6 e1\nV e5 e6 e2 e3\n"),
    (
        "figure8",
        "C+ e4 e5 e1 e2\nC+ e8 e1 e5 e6\nC- e6 e7 e3 e4\nC- e2 e3 e7 e8\n",
    ),
    (
        "torus24",
        "C+ f2 f3 e1 e2\nC+ f4 f1 e3 e4\nC+ e2 e3 f1 f2\nC+ e4 e1 f3 f4\n",
    ),
];

/// Named builtin diagrams.
pub fn builtin(name: &str) -> Option<Diagram> {
    NAMED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, text)| Diagram::parse(text).expect("builtin diagrams parse").with_name(*n))
}

pub fn builtin_names() -> Vec<&'static str> {
    NAMED.iter().map(|(n, _)| *n).collect()
}

pub fn builtins() -> Vec<Diagram> {
    builtin_names().into_iter().filter_map(builtin).collect()
}

/// Named builtins followed by every resolution of every shadow, with exact
/// duplicates (same crossing list) removed.
pub fn corpus() -> Vec<Diagram> {
    let mut out: Vec<Diagram> = builtins();
    for shadow in SHADOWS {
        for d in all_resolutions(shadow) {
            if !out.iter().any(|e| e.items() == d.items()) {
                out.push(d);
            }
        }
    }
    out
}
