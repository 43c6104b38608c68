"""Test package 测试包

Unit tests for Spectral Cubics
Spectral Cubics 的单元测试
"""
