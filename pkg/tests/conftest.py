from hypothesis import settings

settings.register_profile("qcpn", deadline=None, max_examples=100)
settings.load_profile("qcpn")
