//! Published character tables embedded as golden data. The files were
//! transcribed once from the source tables and are never regenerated from
//! code; the library's tables are diffed against them.

use num_bigint::BigInt;

use crate::characters::CharTable;
use crate::partition::Partition;

const CHI_TABLES: &str = include_str!("../goldens/chi_tables.txt");
const CHI_TILDE_TABLES: &str = include_str!("../goldens/chi_tilde_tables.txt");

#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub k: usize,
    pub n: u32,
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl GoldenTable {
    /// Exact comparison against a computed table: same order, same entries.
    pub fn matches(&self, table: &CharTable) -> bool {
        self.k == table.k
            && self.n == table.n
            && self.index == table.index
            && self.entries == table.entries
    }
}

fn parse_partition(token: &str) -> Partition {
    let parts: Vec<u32> = token
        .bytes()
        .map(|b| {
            assert!(b.is_ascii_digit(), "bad partition digit in golden data");
            (b - b'0') as u32
        })
        .collect();
    Partition::new(parts)
}

fn parse_tables(data: &str) -> Vec<GoldenTable> {
    let mut out: Vec<GoldenTable> = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("table") => {
                let k = tokens.next().unwrap().parse().unwrap();
                let n = tokens.next().unwrap().parse().unwrap();
                out.push(GoldenTable {
                    k,
                    n,
                    index: Vec::new(),
                    entries: Vec::new(),
                });
            }
            Some("cols") => {
                let table = out.last_mut().expect("cols before table header");
                table.index = tokens.map(parse_partition).collect();
            }
            Some("row") => {
                let table = out.last_mut().expect("row before table header");
                let name = parse_partition(tokens.next().unwrap());
                let row_idx = table.entries.len();
                assert_eq!(
                    table.index[row_idx], name,
                    "golden rows must follow the column order"
                );
                let row: Vec<BigInt> = tokens
                    .map(|t| t.parse::<i64>().unwrap().into())
                    .collect();
                assert_eq!(row.len(), table.index.len(), "ragged golden row");
                table.entries.push(row);
            }
            other => panic!("unexpected golden line {other:?}"),
        }
    }
    for table in &out {
        assert_eq!(table.entries.len(), table.index.len(), "ragged golden table");
    }
    out
}

/// The published χ tables: (k,n) over {2,3,4} × up to 6.
pub fn golden_chi_tables() -> Vec<GoldenTable> {
    parse_tables(CHI_TABLES)
}

/// The published χ̃ tables, same index sets.
pub fn golden_chi_tilde_tables() -> Vec<GoldenTable> {
    parse_tables(CHI_TILDE_TABLES)
}
