#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


from stirsys.sweeps import run_sweep, summarize


def main():
    # print(summarize(run_sweep('quotient', max_r=4)))
    # print(summarize(run_sweep('identities')))
    print(summarize(run_sweep('det')))


if __name__ == '__main__':
    import cProfile
    cProfile.run('main()', sort='time')
