class AttrDict(dict):
    """
    dict with attribute access, used for configuration and error payloads
    """

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)

    def __setattr__(self, key, value):
        self[key] = value

    def copy(self):
        return AttrDict(self)
