use syzlab::reproduce::{reproduce, ExampleId, DOCUMENTED_DISCREPANCIES};
use syzlab::ring::PrimeField;

#[test]
fn every_example_matches_up_to_documented_discrepancies() {
    let field = PrimeField::default_field();
    for id in ExampleId::ALL {
        let rep = reproduce(id, field, 0).unwrap();
        assert!(rep.unexpected_failures().is_empty(), "{id:?}: {:?}", rep.unexpected_failures());
        let expected = DOCUMENTED_DISCREPANCIES.iter().filter(|(e, _)| *e == id).count();
        assert_eq!(rep.documented_failures().len(), expected, "{id:?}: {:?}", rep.documented_failures());
        if let Some(tag) = id.expected_case() {
            assert_eq!(rep.signature.as_ref().map(|s| s.tag), Some(tag), "{id:?}");
        }
    }
}
