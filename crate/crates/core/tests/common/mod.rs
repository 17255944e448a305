#![allow(dead_code)]

use std::path::PathBuf;

use mcbc::McbcCode;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

fn data_rows(name: &str) -> Vec<Vec<usize>> {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse().expect("integer entry"))
                .collect()
        })
        .collect()
}

/// The 20-item, 16-server affine plane code, read from its incidence matrix
/// (row j = server j, column i = item i).
pub fn affine4_from_incidence() -> McbcCode {
    let rows = data_rows("affine4_incidence.txt");
    let servers = rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &b)| b == 1)
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    McbcCode::from_servers(20, servers).unwrap()
}

/// The same code read from its column listing (column j = items on server j).
pub fn affine4_from_columns() -> McbcCode {
    let rows = data_rows("affine4_columns.txt");
    let servers = (0..rows[0].len())
        .map(|j| rows.iter().map(|row| row[j]).collect())
        .collect();
    McbcCode::from_servers(20, servers).unwrap()
}

/// Five items on five servers; serves any 5 requests with multiplicity up to 2.
pub fn example_one() -> McbcCode {
    McbcCode::from_servers(
        5,
        vec![
            vec![1, 3, 5],
            vec![1, 4, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ],
    )
    .unwrap()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
