from mobius_bf._mobius import *  # noqa: F401,F403
