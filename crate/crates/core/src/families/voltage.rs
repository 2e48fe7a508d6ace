//! Voltage graphs over cyclic groups and their lifts.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DartKind {
    Edge,
    Arc,
}

/// A dart `tail -> head` carrying `voltage ∈ Z_q`. Edge darts are stored once;
/// traversing them backwards uses the negated voltage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
    pub voltage: u64,
    pub kind: DartKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageBaseGraph {
    order: usize,
    q: u64,
    darts: Vec<Dart>,
}

impl VoltageBaseGraph {
    pub fn new(order: usize, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::MalformedBase("group order must be >= 1".into()));
        }
        Ok(Self {
            order,
            q,
            darts: Vec::new(),
        })
    }

    fn push(&mut self, tail: usize, head: usize, voltage: i64, kind: DartKind) -> Result<()> {
        if tail >= self.order || head >= self.order {
            return Err(Error::MalformedBase(format!(
                "dart {tail}->{head} out of range (order {})",
                self.order
            )));
        }
        let voltage = voltage.rem_euclid(self.q as i64) as u64;
        if tail == head && (kind == DartKind::Edge || voltage == 0) {
            return Err(Error::MalformedBase(format!(
                "{kind:?} loop at {tail} with voltage {voltage} does not lift to a matching or arc set"
            )));
        }
        self.darts.push(Dart {
            tail,
            head,
            voltage,
            kind,
        });
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, voltage: i64) -> Result<()> {
        self.push(u, v, voltage, DartKind::Edge)
    }

    pub fn add_arc(&mut self, u: usize, v: usize, voltage: i64) -> Result<()> {
        self.push(u, v, voltage, DartKind::Arc)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Same darts with voltages reduced into `Z_q` for a new `q`.
    pub fn with_group_order(&self, q: u64) -> Result<Self> {
        let mut out = Self::new(self.order, q)?;
        for d in &self.darts {
            out.push(d.tail, d.head, d.voltage as i64, d.kind)?;
        }
        Ok(out)
    }

    /// The 4-vertex base whose `Z_5` lift is `BDM(2,5)`: edges `0~1`, `2~3`
    /// with voltage 0 and arcs `0->3` (2), `3->0` (1), `1->2` (0), `2->1` (2).
    pub fn bdm5_base() -> Self {
        let mut b = Self::new(4, 5).expect("q > 0");
        b.add_edge(0, 1, 0).expect("in range");
        b.add_edge(2, 3, 0).expect("in range");
        b.add_arc(0, 3, 2).expect("in range");
        b.add_arc(3, 0, 1).expect("in range");
        b.add_arc(1, 2, 0).expect("in range");
        b.add_arc(2, 1, 2).expect("in range");
        b
    }

    /// Text form: header `voltagebase ORDER Q`, then `E u v g` / `A u v g`.
    pub fn to_text(&self) -> String {
        let mut out = format!("voltagebase {} {}\n", self.order, self.q);
        for d in &self.darts {
            let tag = if d.kind == DartKind::Edge { 'E' } else { 'A' };
            let _ = writeln!(out, "{tag} {} {} {}", d.tail, d.head, d.voltage);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (order, q) = match h.as_slice() {
            ["voltagebase", o, q] => (
                o.parse().map_err(|_| err(hl, "bad order"))?,
                q.parse().map_err(|_| err(hl, "bad group order"))?,
            ),
            _ => return Err(err(hl, "expected header `voltagebase ORDER Q`")),
        };
        let mut base = Self::new(order, q)?;
        for (ln, line) in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            let [tag, u, v, g] = t.as_slice() else {
                return Err(err(ln, "expected `E u v g` or `A u v g`"));
            };
            let u = u.parse().map_err(|_| err(ln, "bad tail"))?;
            let v = v.parse().map_err(|_| err(ln, "bad head"))?;
            let g: i64 = g.parse().map_err(|_| err(ln, "bad voltage"))?;
            match *tag {
                "E" => base.add_edge(u, v, g)?,
                "A" => base.add_arc(u, v, g)?,
                _ => return Err(err(ln, "unknown record")),
            }
        }
        Ok(base)
    }
}

/// The lift over `Z_q`: vertex `(u, x)` sits at `u·q + x`; a dart `(u, v, g)`
/// yields `(u, x) -> (v, x + g)` for every `x`.
pub fn lift(base: &VoltageBaseGraph) -> Result<MixedGraph> {
    let q = base.q as usize;
    let mut g = MixedGraph::new(base.order * q);
    for d in &base.darts {
        for x in 0..q {
            let from = d.tail * q + x;
            let to = d.head * q + (x + d.voltage as usize) % q;
            match d.kind {
                DartKind::Edge => g.add_edge(from, to)?,
                DartKind::Arc => g.add_arc(from, to)?,
            }
        }
    }
    let labels = (0..base.order * q)
        .map(|v| format!("({},{})", v / q, v % q))
        .collect();
    Ok(g.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{diameter, Distance};

    #[test]
    fn trivial_group_gives_the_base() {
        let mut b = VoltageBaseGraph::new(3, 1).unwrap();
        b.add_edge(0, 1, 0).unwrap();
        b.add_arc(1, 2, 0).unwrap();
        let g = lift(&b).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1)]);
        assert_eq!(g.arc_list(), vec![(1, 2)]);
    }

    #[test]
    fn arc_loop_lifts_to_a_directed_cycle() {
        let mut b = VoltageBaseGraph::new(1, 7).unwrap();
        b.add_arc(0, 0, 1).unwrap();
        let g = lift(&b).unwrap();
        assert_eq!(g.arc_list(), (0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>());
        assert_eq!(diameter(&g), Distance::Finite(6));
    }

    #[test]
    fn malformed_bases() {
        assert!(VoltageBaseGraph::new(2, 0).is_err());
        let mut b = VoltageBaseGraph::new(2, 5).unwrap();
        assert!(b.add_arc(0, 2, 1).is_err());
        assert!(b.add_edge(0, 0, 1).is_err());
        assert!(b.add_arc(1, 1, 5).is_err());
    }

    #[test]
    fn text_round_trip() {
        let b = VoltageBaseGraph::bdm5_base();
        assert_eq!(VoltageBaseGraph::parse(&b.to_text()).unwrap(), b);
        assert!(VoltageBaseGraph::parse("voltagebase 2\n").is_err());
    }

    #[test]
    fn bdm5_base_lift_order_and_diameter() {
        let g = lift(&VoltageBaseGraph::bdm5_base()).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(diameter(&g), Distance::Finite(6));
    }
}
