//! Exhaustive search for the minimum storage at small parameters, compared
//! with the closed forms where one applies.

use mcbc::bounds::{exhaustive_optimal_n, known_exact_n, SearchCaps};

fn main() -> mcbc::Result<()> {
    let caps = SearchCaps::default();
    for (n, k, m, r) in [
        (3, 2, 2, 1),
        (4, 5, 5, 2),
        (2, 2, 3, 2),
        (5, 3, 4, 1),
        (5, 4, 5, 2),
        (4, 3, 5, 1),
    ] {
        let found = exhaustive_optimal_n(n, k, m, r, caps)?;
        let known = known_exact_n(n, k, m, r)
            .map_or("none".to_string(), |v| format!("{} ({})", v.value, v.rule));
        println!("N({n},{k},{m};{r}) = {:<3} known: {known}", found.value);
        println!(
            "    items on servers {:?}",
            found.witness.item_view().blocks()
        );
    }

    // Beyond the caps the search refuses rather than running for hours.
    match exhaustive_optimal_n(8, 4, 5, 1, caps) {
        Ok(found) => println!("N(8,4,5;1) = {}", found.value),
        Err(e) => println!("N(8,4,5;1): {e}"),
    }
    let wide = SearchCaps { max_n: 8, ..caps };
    println!(
        "N(8,4,5;1) = {} with raised caps",
        exhaustive_optimal_n(8, 4, 5, 1, wide)?.value
    );
    Ok(())
}
