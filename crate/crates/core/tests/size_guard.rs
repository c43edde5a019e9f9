use regiongray::families::Coxeter;
use regiongray::lattice::{max_elements, poset_of_regions, try_lattice, LatticeFailure, DEFAULT_MAX_ELEMENTS};

#[test]
fn size_guard() {
    std::env::remove_var("REGIONGRAY_MAX_ELEMENTS");
    assert_eq!(max_elements(), DEFAULT_MAX_ELEMENTS);
    std::env::set_var("REGIONGRAY_MAX_ELEMENTS", "100");
    assert_eq!(max_elements(), 100);
    let (arr, _) = Coxeter::TypeA.arrangement(5).unwrap();
    let g = arr.region_graph();
    let r = try_lattice(poset_of_regions(&g, &Coxeter::TypeA.identity_region(5)).unwrap());
    assert!(matches!(r, Err(LatticeFailure::TooLarge { .. })));
    let (arr, _) = Coxeter::TypeA.arrangement(4).unwrap();
    let g = arr.region_graph();
    assert!(try_lattice(poset_of_regions(&g, &Coxeter::TypeA.identity_region(4)).unwrap()).is_ok());
}
