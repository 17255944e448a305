//! Affine planes as batch codes: union sizes of lines and the (k, r) pairs
//! they support.
//!
//! `cargo run --release --example affine_plane -- 4`

use mcbc::constructions::{affine_plane, steiner_to_mcbc, union_size_table};
use mcbc::hall::DEFAULT_UNION_CAP;
use mcbc::verify_multiset_hall;

fn main() -> mcbc::Result<()> {
    let q: usize = std::env::args()
        .nth(1)
        .map_or(Ok(4), |s| s.parse())
        .expect("order must be an integer");
    let plane = affine_plane(q)?;
    println!(
        "affine plane of order {q}: {} points, {} lines",
        plane.points,
        plane.blocks().len()
    );

    // Lines of the plane as item blocks: one item per line, one server per point.
    let code = steiner_to_mcbc(&plane, 2 * q - 1, q)?;
    let h_max = (q + 2).min(code.n());
    let table = union_size_table(code.item_view(), h_max, DEFAULT_UNION_CAP)?;
    println!("h  min union");
    for (h, u) in table.iter().enumerate() {
        println!("{:<2} {u}", h + 1);
    }

    // Largest k for each r: need min(hr, k) <= table[h] for h <= ceil(k/r).
    for r in 1..=q {
        let k = (r..=plane.points)
            .take_while(|&k| {
                verify_multiset_hall(code.item_view(), k, r)
                    .map(|v| v.valid)
                    .unwrap_or(false)
            })
            .last();
        match k {
            Some(k) => println!("r = {r}: serves every request of size up to {k}"),
            None => println!("r = {r}: no k"),
        }
    }
    Ok(())
}
