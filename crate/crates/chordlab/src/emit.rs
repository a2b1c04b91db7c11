//! Per-object CSV/JSON/text output and coefficient-table JSON.

use std::io::{self, Write};

use chordlab_core::stirling::CoeffTable;
use chordlab_core::trees;
use serde::Serialize;

use crate::ctx::{Ctx, Family, MatchingFamily, PermFamily, SignedFamily, StirlingFamily, WordFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumFamily {
    Matchings,
    Mwords,
    Perms,
    Signed,
    Derangements,
    Stirling,
    Trees012,
    Trees0123,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Text,
    #[default]
    Csv,
    Json,
}

const MATCHING_COLUMNS: &[&str] = &[
    "n", "rank", "arcs", "fixb", "elblock", "olblock", "esblock", "osblock", "cr", "ne", "al", "lne", "lcr", "nal",
    "lrp", "rrp", "trace",
];
const PERM_COLUMNS: &[&str] = &[
    "n", "rank", "oneline", "exc", "drop", "fix", "cyc", "asc", "des", "inv", "cda", "dd",
];
const SIGNED_COLUMNS: &[&str] = &["n", "rank", "oneline", "exc", "fix", "cyc", "wexc", "single"];
const WORD_COLUMNS: &[&str] = &[
    "n",
    "rank",
    "word",
    "lne",
    "lcr",
    "nal",
    "rrp",
    "lrp",
    "inv",
    "coinv",
    "rank_stat",
];
const STIRLING_COLUMNS: &[&str] = &["n", "rank", "word", "asc", "plat", "des"];
const TREE_COLUMNS: &[&str] = &["n", "rank", "tree", "leaves", "deg1", "deg2", "deg3"];

impl EnumFamily {
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            EnumFamily::Matchings => MATCHING_COLUMNS,
            EnumFamily::Mwords => WORD_COLUMNS,
            EnumFamily::Perms | EnumFamily::Derangements => PERM_COLUMNS,
            EnumFamily::Signed => SIGNED_COLUMNS,
            EnumFamily::Stirling => STIRLING_COLUMNS,
            EnumFamily::Trees012 | EnumFamily::Trees0123 => TREE_COLUMNS,
        }
    }

    /// Largest `n` accepted without `--force`.
    pub fn hard_limit(self) -> usize {
        match self {
            EnumFamily::Signed => 8,
            _ => 10,
        }
    }
}

#[derive(Debug, Clone)]
enum Cell {
    Num(u64),
    Str(String),
}

type Row = Vec<Cell>;

struct Sink<'a> {
    columns: &'static [&'static str],
    format: Format,
    csv: Option<csv::Writer<&'a mut dyn Write>>,
    raw: Option<&'a mut dyn Write>,
    rows: u64,
}

impl<'a> Sink<'a> {
    fn new(columns: &'static [&'static str], format: Format, out: &'a mut dyn Write) -> io::Result<Self> {
        let mut sink = Sink {
            columns,
            format,
            csv: None,
            raw: None,
            rows: 0,
        };
        if format == Format::Csv {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(columns)?;
            sink.csv = Some(w);
        } else {
            sink.raw = Some(out);
        }
        Ok(sink)
    }

    fn push(&mut self, row: &Row) -> io::Result<()> {
        let text = |c: &Cell| match c {
            Cell::Num(v) => v.to_string(),
            Cell::Str(s) => s.clone(),
        };
        match self.format {
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.write_record(row.iter().map(text))?;
            }
            Format::Text => {
                let w = self.raw.as_mut().expect("writer");
                let mut line = format!("{}\t{}", text(&row[1]), text(&row[2]));
                for (name, c) in self.columns.iter().zip(row).skip(3) {
                    line.push_str(&format!(" {name}={}", text(c)));
                }
                writeln!(w, "{line}")?;
            }
            Format::Json => {
                let w = self.raw.as_mut().expect("writer");
                let fields: Vec<String> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, c)| match c {
                        Cell::Num(v) => format!("\"{name}\":{v}"),
                        Cell::Str(s) => format!("\"{name}\":{}", serde_json::to_string(s).expect("string")),
                    })
                    .collect();
                let lead = if self.rows == 0 { "[\n" } else { ",\n" };
                write!(w, "{lead}{{{}}}", fields.join(","))?;
            }
        }
        self.rows += 1;
        Ok(())
    }

    fn finish(mut self) -> io::Result<()> {
        if let Some(mut w) = self.csv.take() {
            return w.flush();
        }
        let w = self.raw.as_mut().expect("writer");
        if self.format == Format::Json {
            let close = if self.rows == 0 { "[]\n" } else { "\n]\n" };
            w.write_all(close.as_bytes())?;
        }
        w.flush()
    }
}

/// Ranks handled per shard before rows are written out in order.
const WINDOW: u64 = 1 << 14;

fn stream<F: Family>(
    ctx: &Ctx,
    n: usize,
    sink: &mut Sink<'_>,
    row: impl Fn(u64, &F::Obj, &F::Stats) -> Option<Row> + Sync,
) -> io::Result<()> {
    let count = F::count(n);
    let step = WINDOW * ctx.jobs() as u64;
    let mut base = 0;
    while base < count {
        let len = step.min(count - base);
        let chunks = ctx.sharded(len, |lo, hi| {
            F::from_rank(n, base + lo)
                .take((hi - lo) as usize)
                .zip(base + lo..)
                .filter_map(|(obj, rank)| row(rank, &obj, &F::stats(ctx, &obj)))
                .collect::<Vec<Row>>()
        });
        for r in chunks.iter().flatten() {
            sink.push(r)?;
        }
        base += len;
    }
    Ok(())
}

fn num(v: impl Into<u64>) -> Cell {
    Cell::Num(v.into())
}

fn head(n: usize, rank: u64, obj: impl ToString) -> Row {
    vec![num(n as u64), num(rank), Cell::Str(obj.to_string())]
}

/// Writes every object of `family` at size `n` with its statistics, in rank order.
pub fn enumerate(ctx: &Ctx, family: EnumFamily, n: usize, format: Format, out: &mut dyn Write) -> io::Result<()> {
    let mut sink = Sink::new(family.columns(), format, out)?;
    match family {
        EnumFamily::Matchings => stream::<MatchingFamily>(ctx, n, &mut sink, |rank, m, s| {
            let mut r = head(n, rank, m);
            r.extend(
                [
                    s.fixb, s.elblock, s.olblock, s.esblock, s.osblock, s.cr, s.ne, s.al, s.lne, s.lcr, s.nal, s.lrp,
                    s.rrp, s.trace,
                ]
                .map(num),
            );
            Some(r)
        })?,
        EnumFamily::Mwords => stream::<WordFamily>(ctx, n, &mut sink, |rank, (_, w), (_, s)| {
            let mut r = head(n, rank, w);
            r.extend([s.lne, s.lcr, s.nal, s.rrp, s.lrp, s.inv, s.coinv, s.rank].map(num));
            Some(r)
        })?,
        EnumFamily::Perms | EnumFamily::Derangements => {
            let only_derangements = family == EnumFamily::Derangements;
            stream::<PermFamily>(ctx, n, &mut sink, |rank, p, s| {
                if only_derangements && s.fix != 0 {
                    return None;
                }
                let mut r = head(n, rank, p);
                r.extend([s.exc, s.drop, s.fix, s.cyc, s.asc, s.des, s.inv, s.cda, s.dd].map(num));
                Some(r)
            })?
        }
        EnumFamily::Signed => stream::<SignedFamily>(ctx, n, &mut sink, |rank, p, s| {
            let mut r = head(n, rank, p);
            r.extend([s.exc, s.fix, s.cyc, s.wexc, s.single].map(num));
            Some(r)
        })?,
        EnumFamily::Stirling => stream::<StirlingFamily>(ctx, n, &mut sink, |rank, q, s| {
            let mut r = head(n, rank, q);
            r.extend([s.asc, s.plat, s.des].map(num));
            Some(r)
        })?,
        EnumFamily::Trees012 | EnumFamily::Trees0123 => {
            let max_degree = if family == EnumFamily::Trees012 { 2 } else { 3 };
            let mut rank = 0u64;
            let mut result = Ok(());
            trees::visit_trees(n, max_degree, |t| {
                if result.is_err() {
                    return;
                }
                let mut r = head(n, rank, t);
                r.extend(ctx.tree_hist(t).map(num));
                result = sink.push(&r);
                rank += 1;
            });
            result?
        }
    }
    sink.finish()
}

#[derive(Serialize)]
struct TableEntry {
    i: u32,
    j: u32,
    k: u32,
    c: String,
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: &'a str,
    n: usize,
    entries: Vec<TableEntry>,
}

/// `{"family":..,"n":..,"entries":[{"i","j","k","c"}]}` with entries in key order.
pub fn table_json(family: &str, table: &CoeffTable) -> String {
    let entries = table
        .iter()
        .map(|((i, j, k), c)| TableEntry {
            i,
            j,
            k,
            c: c.to_string(),
        })
        .collect();
    let mut out = serde_json::to_string(&TableJson {
        family,
        n: table.n,
        entries,
    })
    .expect("table serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordlab_core::stirling::xi_table;

    fn render(family: EnumFamily, n: usize, format: Format, jobs: usize) -> String {
        let mut buf = Vec::new();
        enumerate(&Ctx::new(jobs), family, n, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn matching_rows() {
        let csv = render(EnumFamily::Matchings, 2, Format::Csv, 1);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], MATCHING_COLUMNS.join(","));
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn derangements_filter() {
        let csv = render(EnumFamily::Derangements, 4, Format::Csv, 1);
        assert_eq!(csv.lines().count(), 1 + 9);
    }

    #[test]
    fn jobs_do_not_change_output() {
        for family in [EnumFamily::Mwords, EnumFamily::Signed, EnumFamily::Stirling] {
            assert_eq!(render(family, 4, Format::Json, 1), render(family, 4, Format::Json, 3));
        }
    }

    #[test]
    fn json_rows_parse() {
        let v: serde_json::Value = serde_json::from_str(&render(EnumFamily::Trees012, 3, Format::Json, 1)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 3);
        assert_eq!(v[0]["tree"], "1(3,2)");
        assert_eq!(v[0]["leaves"], 2);
    }

    #[test]
    fn xi_table_json() {
        assert_eq!(
            table_json("xi", &xi_table(2)),
            "{\"family\":\"xi\",\"n\":2,\"entries\":[{\"i\":0,\"j\":1,\"k\":0,\"c\":\"2\"},{\"i\":2,\"j\":0,\"k\":0,\"c\":\"1\"}]}\n"
        );
    }
}
