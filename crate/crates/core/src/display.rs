//! Plain-text rendering of shifted diagrams and their statistics.
//!
//! Grids indent row `i` by `i - 1` cells so the staircase of the shifted
//! diagram is visible, with entries right-aligned to a common width:
//!
//! ```text
//! 12 11  8  7  5  4  1
//!     9  6  5  3  2
//!        5  4  2  1
//!           1
//! ```
//!
//! Output is deterministic and ends with a newline (empty for the empty
//! diagram), so callers can compare renderings byte for byte.

use crate::corners::power_sum;
use crate::partition::StrictPartition;

/// The hook lengths of the shifted diagram as an indented grid.
pub fn hook_table(lambda: &StrictPartition) -> String {
    let mut rows = vec![Vec::new(); lambda.len()];
    for b in lambda.boxes() {
        rows[(b.row - 1) as usize].push(b.hook);
    }
    shifted_grid(&rows)
}

/// The contents of the shifted diagram as an indented grid; row `i` reads
/// `1, 2, ..., part(i)`.
pub fn content_table(lambda: &StrictPartition) -> String {
    let rows: Vec<Vec<u64>> = lambda
        .parts()
        .iter()
        .map(|&p| (1..=u64::from(p)).collect())
        .collect();
    shifted_grid(&rows)
}

/// The corner profile as labelled lines: corner coordinates bottom-up, then
/// the outer (`y`) and inner (`x`) content lists.
pub fn corner_table(lambda: &StrictPartition) -> String {
    let profile = lambda.corner_profile();
    let coords = |list: &[(u32, u32)]| {
        if list.is_empty() {
            "-".to_string()
        } else {
            list.iter()
                .map(|&(r, c)| format!("({r},{c})"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    let contents = |list: &[u32]| {
        if list.is_empty() {
            "-".to_string()
        } else {
            list.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    };
    format!(
        "m: {}\nouter corners (row,col): {}\ninner corners (row,col): {}\ny: {}\nx: {}\n",
        profile.m(),
        coords(profile.outer_coords()),
        coords(profile.inner_coords()),
        contents(profile.outer_contents()),
        contents(profile.inner_contents()),
    )
}

/// The corner power sums `q_0, ..., q_k_max`, one per line.
pub fn power_sum_table(lambda: &StrictPartition, k_max: u32) -> String {
    let mut out = String::new();
    for k in 0..=k_max {
        out.push_str(&format!("q_{k} = {}\n", power_sum(lambda, k)));
    }
    out
}

fn shifted_grid(rows: &[Vec<u64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|entry| entry.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|entry| format!("{entry:>width$}")).collect();
        out.push_str(&" ".repeat(i * (width + 1)));
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
