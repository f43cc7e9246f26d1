use grigorchuk::{CubeVertex, GroupElement, OmegaSequence, WordSolver};

#[test]
fn readme_example() -> grigorchuk::Result<()> {
    let omega: OmegaSequence = ":012".parse()?;
    let g = GroupElement::parse_word(&omega, "adadadad")?;
    assert!(WordSolver::new().is_trivial(&g));

    let b = GroupElement::parse_word(&omega, "b")?;
    assert_eq!(CubeVertex::base().act(&b).to_string(), "0inf,01");
    Ok(())
}
