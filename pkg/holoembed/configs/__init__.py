"""
Configuration Package

Process settings (environment, .env) and logging setup.
"""
