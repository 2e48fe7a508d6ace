use std::fmt;
use std::fmt::Write as _;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::format::{parse_edge_list, to_edge_list};
use crate::graph::{bipartition, validate_and_profile, MixedGraph};
use crate::metrics::diameter_at_most;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Exhaustive,
    Lift,
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchKind::Exhaustive => "exhaustive",
            SearchKind::Lift => "lift",
        })
    }
}

/// Outcome of a maximum-order search.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub kind: SearchKind,
    pub k: u32,
    /// Orders examined, in the order they were tried.
    pub orders_tested: Vec<usize>,
    /// Largest order with a witness of diameter at most `k`.
    pub order: Option<usize>,
    /// True when every candidate of every tested order was examined.
    pub exhaustive: bool,
    pub candidates: u64,
    pub seed: Option<u64>,
    /// Number of isomorphism classes among the witnesses found.
    pub witness_classes: usize,
    /// Canonically labelled witnesses, sorted by edge-list text.
    pub witnesses: Vec<MixedGraph>,
    /// Not serialized.
    pub wall_time: Duration,
}

impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.to_text() == other.to_text()
    }
}

impl SearchReport {
    pub(crate) fn empty(kind: SearchKind, k: u32, seed: Option<u64>) -> Self {
        Self {
            kind,
            k,
            orders_tested: Vec::new(),
            order: None,
            exhaustive: true,
            candidates: 0,
            seed,
            witness_classes: 0,
            witnesses: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    /// Line-oriented text: `key value` header lines, then each witness as
    /// `witness I` followed by its edge list.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut out = String::from("searchreport\n");
        let _ = writeln!(out, "kind {}", self.kind);
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "orders_tested {}", join(&self.orders_tested));
        let _ = writeln!(
            out,
            "order {}",
            self.order.map_or("none".to_string(), |o| o.to_string())
        );
        let _ = writeln!(out, "exhaustive {}", self.exhaustive);
        let _ = writeln!(out, "candidates {}", self.candidates);
        let _ = writeln!(
            out,
            "seed {}",
            self.seed.map_or("none".to_string(), |s| s.to_string())
        );
        let _ = writeln!(out, "classes {}", self.witness_classes);
        let _ = writeln!(out, "witnesses {}", self.witnesses.len());
        for (i, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "witness {i}");
            out.push_str(&to_edge_list(w));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut it = lines.iter().copied().peekable();
        match it.next() {
            Some((_, "searchreport")) => {}
            Some((l, _)) => return Err(err(l, "expected `searchreport` header")),
            None => return Err(err(1, "empty input")),
        }
        let mut field = |name: &str| -> Result<(usize, &str)> {
            let (l, line) = it.next().ok_or_else(|| err(0, "truncated report"))?;
            let rest = line
                .strip_prefix(name)
                .filter(|r| r.is_empty() || r.starts_with(' '))
                .ok_or_else(|| err(l, &format!("expected `{name}`")))?;
            Ok((l, rest.trim()))
        };
        let num = |l: usize, s: &str| -> Result<u64> { s.parse().map_err(|_| err(l, "bad number")) };
        let opt = |l: usize, s: &str| -> Result<Option<u64>> {
            if s == "none" {
                Ok(None)
            } else {
                num(l, s).map(Some)
            }
        };

        let (l, kind) = field("kind")?;
        let kind = match kind {
            "exhaustive" => SearchKind::Exhaustive,
            "lift" => SearchKind::Lift,
            _ => return Err(err(l, "unknown kind")),
        };
        let (l, k) = field("k")?;
        let k = u32::try_from(num(l, k)?).map_err(|_| err(l, "k out of range"))?;
        let (l, orders) = field("orders_tested")?;
        let orders_tested = orders
            .split_whitespace()
            .map(|s| num(l, s).map(|x| x as usize))
            .collect::<Result<Vec<_>>>()?;
        let (l, order) = field("order")?;
        let order = opt(l, order)?.map(|o| o as usize);
        let (l, exhaustive) = field("exhaustive")?;
        let exhaustive = exhaustive.parse().map_err(|_| err(l, "bad flag"))?;
        let (l, candidates) = field("candidates")?;
        let candidates = num(l, candidates)?;
        let (l, seed) = field("seed")?;
        let seed = opt(l, seed)?;
        let (l, classes) = field("classes")?;
        let witness_classes = num(l, classes)? as usize;
        let (l, count) = field("witnesses")?;
        let count = num(l, count)? as usize;

        let mut witnesses = Vec::with_capacity(count);
        for i in 0..count {
            match it.next() {
                Some((_, line)) if line == format!("witness {i}") => {}
                Some((l, _)) => return Err(err(l, &format!("expected `witness {i}`"))),
                None => return Err(err(0, "missing witness")),
            }
            let mut block = String::new();
            let mut first = None;
            while let Some(&(l, line)) = it.peek() {
                if line.starts_with("witness ") {
                    break;
                }
                first.get_or_insert(l);
                block.push_str(line);
                block.push('\n');
                it.next();
            }
            let g = parse_edge_list(&block).map_err(|e| match e {
                Error::Parse { line, msg } => Error::Parse {
                    line: line + first.unwrap_or(1) - 1,
                    msg,
                },
                other => other,
            })?;
            witnesses.push(g);
        }
        Ok(Self {
            kind,
            k,
            orders_tested,
            order,
            exhaustive,
            candidates,
            seed,
            witness_classes,
            witnesses,
            wall_time: Duration::ZERO,
        })
    }

    /// Re-checks every witness: order, degrees, bipartiteness and diameter.
    pub fn validate(&self) -> Result<()> {
        for (i, w) in self.witnesses.iter().enumerate() {
            let bad = |msg: &str| Err(Error::MalformedGraph(format!("witness {i}: {msg}")));
            if Some(w.n()) != self.order {
                return bad("order differs from the reported order");
            }
            let profile = validate_and_profile(w)?;
            if profile.max_undirected() > 1 || profile.max_out() > 1 {
                return bad("degree exceeds (1,1)");
            }
            if bipartition(w).is_none() {
                return bad("not bipartite");
            }
            if !diameter_at_most(w, self.k) {
                return bad("diameter exceeds k");
            }
        }
        Ok(())
    }
}
