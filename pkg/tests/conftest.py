from hypothesis import settings

settings.register_profile("tropgeo", deadline=None, max_examples=60)
settings.load_profile("tropgeo")
