//! Both key algorithms over whole crystals.

use kntab::crystal::generate_crystal;
use kntab::keys::{left_key_direct, left_key_sjdt, right_key_direct, right_key_sjdt};
use kntab::Partition;

#[test]
fn direct_and_jeu_de_taquin_keys_agree() {
    let mut checked = 0;
    for n in 2..=3 {
        for size in 1..=6 {
            for shape in Partition::all_of_size(size, n) {
                let g = generate_crystal(&shape, n).unwrap();
                for t in g.vertices() {
                    let right = right_key_direct(t).unwrap();
                    let left = left_key_direct(t).unwrap();
                    assert_eq!(right, right_key_sjdt(t).unwrap(), "right key of {}", t);
                    assert_eq!(left, left_key_sjdt(t).unwrap(), "left key of {}", t);
                    assert!(left.le_entrywise(t) && t.le_entrywise(&right), "{}", t);
                    assert!(right.is_key_tableau() && left.is_key_tableau());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}
