//! Fixtures shared by the benchmarks.

pub use skewbrace;

use skewbrace::group::catalog;
use skewbrace::FiniteGroup;

/// Groups of order 8 from the test corpus, by name.
pub fn order_eight() -> Vec<(String, FiniteGroup)> {
    catalog::corpus(8).into_iter().filter(|(_, g)| g.order() == 8).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn five_groups_of_order_eight() {
        let names: Vec<String> = super::order_eight().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["Z8", "Z2^3", "D4", "Q8", "Z2xZ4"]);
    }
}
