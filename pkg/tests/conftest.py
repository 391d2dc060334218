from hypothesis import settings

# exact polynomial arithmetic has uneven per-example cost
settings.register_profile("default", deadline=None)
settings.load_profile("default")
