"""Lossy kernelization for Connected Vertex Cover."""
