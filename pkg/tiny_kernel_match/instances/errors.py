class GeneratorSpecError(ValueError):
    pass
