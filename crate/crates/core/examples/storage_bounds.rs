//! Lower bounds, known values and construction costs for N(n, k, m; r).
//!
//! `cargo run --example storage_bounds -- 4 6 2` prints the table for k = 4,
//! m = 6, r = 2.

use mcbc::bounds::{construction_upper, known_exact_n, lower_bounds, BoundsReport};

fn main() -> mcbc::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"))
        .collect();
    let (k, m, r) = match args[..] {
        [k, m, r] => (k, m, r),
        _ => (4, 6, 2),
    };
    println!("k = {k}, m = {m}, r = {r}");
    println!(
        "{:>4} {:>6} {:>6} {:>6}  rule / construction",
        "n", "lower", "exact", "upper"
    );
    for n in 1..=24 {
        let lower = lower_bounds(n, k, m, r)?.best();
        let exact = known_exact_n(n, k, m, r);
        let upper = construction_upper(n, k, m, r)?;
        let cell = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{n:>4} {lower:>6} {:>6} {:>6}  {} / {}",
            cell(exact.map(|e| e.value)),
            cell(upper.as_ref().map(|u| u.value)),
            exact.map_or("-", |e| e.rule),
            upper.as_ref().map_or("-", |u| u.rule.as_str()),
        );
    }

    let report = BoundsReport::compute(12, 3, 4, 1)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(())
}
