//! Build one code with each construction and report its storage.

use mcbc::constructions::{
    affine_plane_mcbc, construct_diagonal, construct_distance4, construct_from_cwc,
    construct_regular, construct_replication, construct_small_n_distinct, graham_sloane_cwc,
};
use mcbc::{verify_multiset_hall, McbcCode};

fn show(name: &str, code: &McbcCode, k: usize, r: usize) -> mcbc::Result<()> {
    let ok = verify_multiset_hall(code.item_view(), k, r)?.valid;
    println!(
        "{name:<14} n={:<3} m={:<3} N={:<4} k={k:<2} r={r}  hall={ok}",
        code.n(),
        code.m(),
        code.storage()
    );
    Ok(())
}

fn main() -> mcbc::Result<()> {
    show("replication", &construct_replication(8, 3, 4, 2)?, 3, 2)?;
    show("small-n", &construct_small_n_distinct(5, 4, 5)?, 4, 3)?;

    let code = graham_sloane_cwc(8, 3)?;
    println!("residue code (8, 3): {} codewords", code.len());
    show("cwc", &construct_from_cwc(&code, 5, 3)?, 5, 3)?;

    show("distance4", &construct_distance4(8, 4, 5, 2)?, 4, 2)?;
    show("diagonal", &construct_diagonal(4, 5, 2)?, 5, 2)?;
    show("affine q=3", &affine_plane_mcbc(3, 5, 3)?, 5, 3)?;
    show("affine q=4", &affine_plane_mcbc(4, 7, 4)?, 7, 4)?;
    show("regular", &construct_regular(6, 4, 6)?, 4, 4)?;

    // Out-of-range parameters are rejected with the failing condition.
    if let Err(e) = construct_replication(5, 3, 4, 2) {
        println!("replication(5, 3, 4, 2): {e}");
    }
    Ok(())
}
