//! Combinatorial virtual link diagrams.
//!
//! A diagram is a list of crossings wired together by named semiarcs. Every
//! crossing has four slots `(in1, out1, in2, out2)`: for a classical crossing
//! the first strand is the under-strand and the second the over-strand, for a
//! virtual crossing the two strands are interchangeable. A semiarc runs from
//! the out-slot where it is named to the in-slot where it is named again.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Positive,
    Negative,
    Virtual,
}

impl CrossingKind {
    pub fn tag(self) -> &'static str {
        match self {
            CrossingKind::Positive => "C+",
            CrossingKind::Negative => "C-",
            CrossingKind::Virtual => "V",
        }
    }

    pub fn is_classical(self) -> bool {
        self != CrossingKind::Virtual
    }

    pub fn sign(self) -> i64 {
        match self {
            CrossingKind::Positive => 1,
            CrossingKind::Negative => -1,
            CrossingKind::Virtual => 0,
        }
    }
}

/// Slot positions within a crossing.
pub const IN1: usize = 0;
pub const OUT1: usize = 1;
pub const IN2: usize = 2;
pub const OUT2: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Item {
    Crossing {
        kind: CrossingKind,
        slots: [String; 4],
    },
    /// A crossing-free circle carrying a single semiarc.
    Loop(String),
}

/// A crossing with its slots resolved to semiarc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub slots: [usize; 4],
}

/// Which strand of the inserted kink crossing continues the original strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinkChirality {
    /// The strand enters as the under-strand and leaves as the over-strand.
    UnderFirst,
    /// The strand enters as the over-strand and leaves as the under-strand.
    OverFirst,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Diagram {
    name: String,
    items: Vec<Item>,
    semiarcs: Vec<String>,
    crossings: Vec<Crossing>,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    self_writhe: Vec<i64>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '§')
}

impl Diagram {
    /// Validates a list of items and derives semiarcs, components and
    /// self-writhe.
    pub fn new(name: impl Into<String>, items: Vec<Item>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        let semiarcs: Vec<String> = items
            .iter()
            .flat_map(|it| match it {
                Item::Crossing { slots, .. } => slots.to_vec(),
                Item::Loop(s) => vec![s.clone()],
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&str, usize> = semiarcs.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();

        let m = semiarcs.len();
        let mut in_deg = vec![0usize; m];
        let mut out_deg = vec![0usize; m];
        // in_site[s] = (crossing, slot) where s enters; None for loops
        let mut in_site: Vec<Option<(usize, usize)>> = vec![None; m];
        let mut crossings = Vec::new();
        for it in &items {
            match it {
                Item::Crossing { kind, slots } => {
                    let idx = slots.clone().map(|s| index[s.as_str()]);
                    for (k, &s) in idx.iter().enumerate() {
                        if k % 2 == 0 {
                            in_deg[s] += 1;
                            in_site[s] = Some((crossings.len(), k));
                        } else {
                            out_deg[s] += 1;
                        }
                    }
                    crossings.push(Crossing {
                        kind: *kind,
                        slots: idx,
                    });
                }
                Item::Loop(s) => {
                    in_deg[index[s.as_str()]] += 1;
                    out_deg[index[s.as_str()]] += 1;
                }
            }
        }
        for s in 0..m {
            if in_deg[s] != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "semiarc {}: in-degree {}",
                    semiarcs[s], in_deg[s]
                )));
            }
            if out_deg[s] != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "semiarc {}: out-degree {}",
                    semiarcs[s], out_deg[s]
                )));
            }
        }

        // first appearance order over items and slots
        let appearance: Vec<usize> = items
            .iter()
            .flat_map(|it| match it {
                Item::Crossing { slots, .. } => slots.iter().map(|s| index[s.as_str()]).collect::<Vec<_>>(),
                Item::Loop(s) => vec![index[s.as_str()]],
            })
            .collect();
        let mut component_of = vec![usize::MAX; m];
        let mut components = Vec::new();
        for start in appearance {
            if component_of[start] != usize::MAX {
                continue;
            }
            let k = components.len();
            let mut orbit = Vec::new();
            let mut s = start;
            loop {
                component_of[s] = k;
                orbit.push(s);
                s = match in_site[s] {
                    Some((c, slot)) => crossings[c].slots[slot + 1],
                    None => s,
                };
                if s == start {
                    break;
                }
            }
            components.push(orbit);
        }

        let mut self_writhe = vec![0i64; components.len()];
        for c in &crossings {
            if c.kind.is_classical() {
                let (a, b) = (component_of[c.slots[IN1]], component_of[c.slots[IN2]]);
                if a == b {
                    self_writhe[a] += c.kind.sign();
                }
            }
        }

        Ok(Self {
            name: name.into(),
            items,
            semiarcs,
            crossings,
            components,
            component_of,
            self_writhe,
        })
    }

    /// Parses the line-oriented diagram format: `link <name>`, `C+ ...`,
    /// `C- ...`, `V ...` and `O s` lines, with `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::new();
        let mut items = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::DiagramSyntax { line: lineno + 1, msg };
            let mut toks = line.split_whitespace();
            let tag = toks.next().expect("nonempty line");
            let args: Vec<&str> = toks.collect();
            if tag == "link" {
                name = args.join(" ");
                continue;
            }
            if let Some(bad) = args.iter().find(|a| !valid_name(a)) {
                return Err(err(format!("invalid semiarc name {bad:?}")));
            }
            let kind = match tag {
                "C+" => CrossingKind::Positive,
                "C-" => CrossingKind::Negative,
                "V" => CrossingKind::Virtual,
                "O" => {
                    if args.len() != 1 {
                        return Err(err(format!("O takes 1 semiarc, got {}", args.len())));
                    }
                    items.push(Item::Loop(args[0].to_string()));
                    continue;
                }
                other => return Err(err(format!("unknown line tag {other:?}"))),
            };
            let slots: [&str; 4] = args
                .as_slice()
                .try_into()
                .map_err(|_| err(format!("{tag} takes 4 semiarcs, got {}", args.len())))?;
            items.push(Item::Crossing {
                kind,
                slots: slots.map(str::to_string),
            });
        }
        Self::new(name, items)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Semiarc names in sorted order; semiarc indices refer to this list.
    pub fn semiarcs(&self) -> &[String] {
        &self.semiarcs
    }

    pub fn semiarc_index(&self, name: &str) -> Option<usize> {
        self.semiarcs.binary_search_by(|s| s.as_str().cmp(name)).ok()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn classical_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.kind.is_classical()).count()
    }

    /// Components as semiarc indices in traversal order, ordered by first
    /// appearance in the diagram text.
    pub fn component_indices(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn components(&self) -> Vec<Vec<String>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|&s| self.semiarcs[s].clone()).collect())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, semiarc: usize) -> usize {
        self.component_of[semiarc]
    }

    /// Algebraic count of classical self-crossings per component.
    pub fn self_writhe(&self) -> &[i64] {
        &self.self_writhe
    }

    fn fresh_pair(&self, base: &str) -> (String, String) {
        let taken = |s: &str| self.semiarc_index(s).is_some();
        (1..)
            .map(|k| {
                let suffix = if k == 1 { String::new() } else { k.to_string() };
                (format!("{base}§l{suffix}"), format!("{base}§x{suffix}"))
            })
            .find(|(l, x)| !taken(l) && !taken(x))
            .expect("unbounded counter")
    }

    /// Inserts one positive kink at the lexicographically least semiarc of the
    /// component.
    pub fn add_positive_kink(&self, component: usize) -> Result<Diagram> {
        if component >= self.components.len() {
            return Err(Error::ComponentOutOfRange {
                index: component,
                count: self.components.len(),
            });
        }
        let site = *self.components[component]
            .iter()
            .min()
            .expect("components are nonempty");
        self.add_kink_at(&self.semiarcs[site].clone(), KinkChirality::UnderFirst)
    }

    /// Inserts a positive kink on the given semiarc. The semiarc keeps its
    /// upstream end and enters the new crossing; a fresh loop semiarc and a
    /// fresh exit semiarc are created, and the exit semiarc takes over the
    /// old downstream end.
    pub fn add_kink_at(&self, semiarc: &str, chirality: KinkChirality) -> Result<Diagram> {
        let s = self
            .semiarc_index(semiarc)
            .ok_or_else(|| Error::UnknownSemiarc(semiarc.to_string()))?;
        let s_name = self.semiarcs[s].clone();
        let (l, x) = self.fresh_pair(&s_name);

        let mut items = self.items.clone();
        let kink = |exit: &str| {
            let slots = match chirality {
                KinkChirality::UnderFirst => [s_name.clone(), l.clone(), l.clone(), exit.to_string()],
                KinkChirality::OverFirst => [l.clone(), exit.to_string(), s_name.clone(), l.clone()],
            };
            Item::Crossing {
                kind: CrossingKind::Positive,
                slots,
            }
        };

        if let Some(pos) = items.iter().position(|it| matches!(it, Item::Loop(n) if *n == s_name)) {
            items[pos] = kink(&s_name);
        } else {
            let downstream = items.iter_mut().find_map(|it| match it {
                Item::Crossing { slots, .. } => [IN1, IN2]
                    .into_iter()
                    .find(|&k| slots[k] == s_name)
                    .map(|k| &mut slots[k]),
                Item::Loop(_) => None,
            });
            *downstream.expect("validated diagram has an in-slot for every semiarc") = x.clone();
            items.push(kink(&x));
        }
        Diagram::new(self.name.clone(), items)
    }

    /// The same diagram with the traversal direction of one component
    /// reversed (in- and out-slots of its strand passages exchanged).
    pub fn reverse_component(&self, component: usize) -> Result<Diagram> {
        if component >= self.components.len() {
            return Err(Error::ComponentOutOfRange {
                index: component,
                count: self.components.len(),
            });
        }
        let on = |name: &str| self.component_of[self.semiarc_index(name).expect("known")] == component;
        let items = self
            .items
            .iter()
            .map(|it| match it {
                Item::Crossing { kind, slots } => {
                    let mut slots = slots.clone();
                    for k in [IN1, IN2] {
                        if on(&slots[k]) {
                            slots.swap(k, k + 1);
                        }
                    }
                    Item::Crossing { kind: *kind, slots }
                }
                Item::Loop(s) => Item::Loop(s.clone()),
            })
            .collect();
        Diagram::new(self.name.clone(), items)
    }

    /// Renders the diagram in the format read by [`parse`](Self::parse).
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            writeln!(f, "link {}", self.name)?;
        }
        for it in &self.items {
            match it {
                Item::Crossing { kind, slots } => writeln!(f, "{} {}", kind.tag(), slots.join(" "))?,
                Item::Loop(s) => writeln!(f, "O {s}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Diagram({:?}; {})",
            self.name,
            self.to_string().trim_end().replace('\n', " / ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const VHOPF: &str = "V a2 a1 b2 b1\nC+ b1 b2 a1 a2\n";

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn virtual_hopf_components() {
        let d = Diagram::parse(VHOPF).unwrap();
        assert_eq!(d.semiarcs().len(), 4);
        assert_eq!(d.components(), vec![names(&["a2", "a1"]), names(&["b2", "b1"])]);
        assert_eq!(d.self_writhe(), &[0, 0]);
    }

    #[test]
    fn free_loop() {
        let d = Diagram::parse("O s").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.components(), vec![names(&["s"])]);
        assert_eq!(d.self_writhe(), &[0]);
    }

    #[test]
    fn kinked_unknot() {
        let d = Diagram::parse("C+ s t t s").unwrap();
        assert_eq!(d.components(), vec![names(&["s", "t"])]);
        assert_eq!(d.self_writhe(), &[1]);
    }

    #[test]
    fn trefoil_shaped_writhe() {
        let d = Diagram::parse("C+ e1 e2 e4 e5\nC+ e3 e4 e6 e1\nC+ e5 e6 e2 e3").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.self_writhe(), &[3]);
    }

    #[test]
    fn degree_errors() {
        let err = Diagram::parse("C+ x a x b\nC+ a x b y").unwrap_err();
        assert_eq!(err.to_string(), "semiarc x: in-degree 2");
        assert!(Diagram::parse("C+ a b c").is_err());
        assert!(Diagram::parse("# nothing\n")
            .unwrap_err()
            .to_string()
            .contains("empty diagram"));
        assert!(matches!(
            Diagram::parse("X a b c d"),
            Err(Error::DiagramSyntax { line: 1, .. })
        ));
        assert!(Diagram::parse("O a-b").is_err());
    }

    #[test]
    fn parse_serialize_parse() {
        let d = Diagram::parse("link vhopf\n# comment\nV a2 a1 b2 b1\nC+ b1 b2 a1 a2 # trailing\n").unwrap();
        assert_eq!(d.name(), "vhopf");
        assert_eq!(Diagram::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn kink_on_free_loop() {
        let d = Diagram::parse("O s").unwrap().add_positive_kink(0).unwrap();
        assert_eq!(d.to_text(), "C+ s s§l s§l s\n");
        assert_eq!(d.self_writhe(), &[1]);
        let d2 = d.add_positive_kink(0).unwrap();
        assert_eq!(d2.crossing_count(), 2);
        assert_eq!(d2.self_writhe(), &[2]);
        assert_eq!(Diagram::parse(&d2.to_text()).unwrap(), d2);
    }

    #[test]
    fn kink_on_virtual_hopf() {
        let d = Diagram::parse(VHOPF).unwrap().add_positive_kink(0).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.self_writhe(), &[1, 0]);
        assert!(d.to_text().contains("C+ a1 a1§l a1§l a1§x"));
        assert_eq!(d.components()[1], names(&["b2", "b1"]));

        let d = Diagram::parse(VHOPF).unwrap().add_positive_kink(1).unwrap();
        assert_eq!(d.self_writhe(), &[0, 1]);
    }

    #[test]
    fn fresh_names_do_not_collide() {
        let d = Diagram::parse("C+ s s§l s§l s").unwrap();
        let k = d.add_kink_at("s", KinkChirality::UnderFirst).unwrap();
        assert!(k.semiarc_index("s§l2").is_some());
        assert!(k.semiarc_index("s§x2").is_some());
        assert_eq!(k.self_writhe(), &[2]);
    }

    #[test]
    fn kink_errors() {
        let d = Diagram::parse("O s").unwrap();
        assert!(matches!(d.add_positive_kink(1), Err(Error::ComponentOutOfRange { .. })));
        assert!(matches!(
            d.add_kink_at("t", KinkChirality::OverFirst),
            Err(Error::UnknownSemiarc(_))
        ));
    }

    #[test]
    fn reversal_keeps_components_and_writhe() {
        let d = Diagram::parse("C+ e1 e2 e4 e5\nC+ e3 e4 e6 e1\nC+ e5 e6 e2 e3").unwrap();
        let r = d.reverse_component(0).unwrap();
        assert_eq!(r.component_count(), 1);
        assert_eq!(r.self_writhe(), d.self_writhe());
        assert_eq!(r.reverse_component(0).unwrap(), d);
    }
}
