from hypothesis import settings

settings.register_profile("suite", max_examples=60, derandomize=True,
                          deadline=None)
settings.load_profile("suite")
