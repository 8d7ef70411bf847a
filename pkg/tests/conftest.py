import hypothesis

# Deterministic, deadline-free profile: the integrands are cheap but
# adaptive quadrature inside a property can outrun the default 200ms.
hypothesis.settings.register_profile(
    "kscolour",
    deadline=None,
    max_examples=100,
    derandomize=True,
)
hypothesis.settings.load_profile("kscolour")
