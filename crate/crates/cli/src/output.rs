//! Rendering helpers: JSON per the documented schemas, CSV with quoted
//! partition labels, and aligned text tables. All orders are canonical, so
//! output is deterministic for fixed arguments.

use num_bigint::BigInt;

use kschur_core::characters::CharTable;
use kschur_core::ncsf::AlgebraElement;
use kschur_core::partition::Partition;

pub fn partition_json(p: &Partition) -> serde_json::Value {
    serde_json::Value::Array(
        p.parts()
            .iter()
            .map(|&x| serde_json::Value::from(x))
            .collect(),
    )
}

fn to_i64(value: &BigInt) -> i64 {
    i64::try_from(value).expect("table entries fit in 64 bits at desk scale")
}

pub fn print_algebra_element(element: &AlgebraElement, json: bool) {
    let mut entries: Vec<(Vec<usize>, i64)> = element
        .terms()
        .map(|(e, c)| (e.lex_least_reduced_word(), to_i64(c)))
        .collect();
    entries.sort();
    if json {
        let arr: Vec<serde_json::Value> = entries
            .iter()
            .map(|(word, coeff)| {
                serde_json::json!({
                    "coeff": coeff,
                    "word": word,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(arr));
    } else {
        println!("{element}");
    }
}

pub fn print_mn_rows(rows: &[(Partition, BigInt, u32)], json: bool) {
    if json {
        let arr: Vec<serde_json::Value> = rows
            .iter()
            .map(|(shape, coeff, height)| {
                serde_json::json!({
                    "coeff": to_i64(coeff),
                    "partition": partition_json(shape),
                    "height": height,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(arr));
    } else {
        for (shape, coeff, height) in rows {
            let sign = if coeff >= &BigInt::from(0) { "+" } else { "-" };
            println!("{sign}{}  height {height}", shape);
        }
    }
}

pub fn print_table_json(table: &CharTable) {
    let index: Vec<serde_json::Value> = table.index.iter().map(partition_json).collect();
    let entries: Vec<Vec<i64>> = table
        .entries
        .iter()
        .map(|row| row.iter().map(to_i64).collect())
        .collect();
    println!(
        "{}",
        serde_json::json!({
            "k": table.k,
            "n": table.n,
            "rows": index,
            "cols": index,
            "entries": entries,
        })
    );
}

pub fn print_table_csv(table: &CharTable) {
    let header: Vec<String> = std::iter::once(String::from("\"\""))
        .chain(table.index.iter().map(|p| format!("\"{p}\"")))
        .collect();
    println!("{}", header.join(","));
    for (row_label, row) in table.index.iter().zip(&table.entries) {
        let mut fields = vec![format!("\"{row_label}\"")];
        fields.extend(row.iter().map(|e| e.to_string()));
        println!("{}", fields.join(","));
    }
}

pub fn print_table_text(table: &CharTable, dual: bool) {
    let name = if dual { "chi~" } else { "chi" };
    println!("{name} table: k={}, n={}", table.k, table.n);
    let labels: Vec<String> = table.index.iter().map(|p| p.to_string()).collect();
    let label_width = labels.iter().map(|s| s.len()).max().unwrap_or(1);
    let cell_width = table
        .entries
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1)
        .max(labels.iter().map(|s| s.len()).max().unwrap_or(1));
    print!("{:label_width$}", "");
    for label in &labels {
        print!(" {label:>cell_width$}");
    }
    println!();
    for (label, row) in labels.iter().zip(&table.entries) {
        print!("{label:label_width$}");
        for entry in row {
            print!(" {:>cell_width$}", entry.to_string());
        }
        println!();
    }
}
