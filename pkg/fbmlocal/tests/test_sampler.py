# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import unittest, os, json, shutil, tempfile
import numpy as np
from fbmlocal import fitting, sampler
from fbmlocal.exceptions import ValidationError

class AutocovarianceTest( unittest.TestCase ):

    def testLags( self ):
        for H in ( 0.25, 0.5, 0.75 ):
            gamma = sampler.incrementAutocovariance([ 0, 1 ], 1.0, H )
            self.assertAlmostEqual( gamma[0], 1.0, places = 14 )
            self.assertAlmostEqual( gamma[1], sampler.theoreticalLag1( H ), places = 14 )

    def testBrownianCovariance( self ):
        np.testing.assert_allclose( sampler.analyticCovariance( 4, 0.25, 0.5 ), 0.25 * np.eye( 4 ), atol = 1e-15 )

class SamplingTest( unittest.TestCase ):

    def testShapeAndMethod( self ):
        paths = sampler.sampleFbmIncrements( 32, 0.5, 0.75, 10, seed = 1 )
        self.assertEqual( paths.data.shape, ( 10, 32 ) )
        self.assertEqual( paths.method, sampler.CIRCULANT )
        self.assertEqual( paths.getPaths().shape, ( 10, 33 ) )
        np.testing.assert_array_equal( paths.getPaths()[:, 0], 0.0 )
        self.assertEqual( paths.getData()['seed'], 1 )

    def testReproducible( self ):
        first = sampler.sampleFbmIncrements( 16, 1.0, 0.3, 2500, seed = 42 )
        second = sampler.sampleFbmIncrements( 16, 1.0, 0.3, 2500, seed = 42, threads = 3 )
        np.testing.assert_array_equal( first.data, second.data )

        other = sampler.sampleFbmIncrements( 16, 1.0, 0.3, 2500, seed = 43 )
        self.assertFalse( np.array_equal( first.data, other.data ) )

    def testCholesky( self ):
        paths = sampler.sampleFbmIncrements( 8, 1.0, 0.6, 5, seed = 0, method = sampler.CHOLESKY )
        self.assertEqual( paths.method, sampler.CHOLESKY )
        self.assertEqual( paths.data.shape, ( 5, 8 ) )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            sampler.sampleFbmIncrements( 0, 1.0, 0.6, 5, seed = 0 )

        with self.assertRaises( ValidationError ):
            sampler.sampleFbmIncrements( 8, 0.0, 0.6, 5, seed = 0 )

        with self.assertRaises( ValidationError ):
            sampler.sampleFbmIncrements( 8, 1.0, 0.6, 5, seed = 0, method = 'hosking' )

    def testLag1( self ):
        for H in ( 0.3, 0.75 ):
            paths = sampler.sampleFbmIncrements( 64, 1.0, H, 4000, seed = 7 )
            ratio, error = sampler.lag1Correlation( paths )
            self.assertGreater( error, 0.0 )
            self.assertLess( abs( ratio - sampler.theoreticalLag1( H ) ), 6.0 * error )

    def testCovarianceDistance( self ):
        few = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 200, seed = 3 )
        many = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 20000, seed = 3 )
        self.assertLess( sampler.covarianceDistance( many ), sampler.covarianceDistance( few ) )

    def testCovarianceDistanceRate( self ):
        sizes = ( 1000, 10000, 100000 )
        distances = [ np.mean([ sampler.covarianceDistance( sampler.sampleFbmIncrements( 8, 1.0, 0.75, m, seed = seed ) ) 
            for seed in range( 4 ) ]) for m in sizes ]

        fit = fitting.fitPowerLaw( sizes, distances, theory = -0.5 )
        self.assertLess( abs( fit.slope + 0.5 ), 0.2 )

class MiCheckTest( unittest.TestCase ):

    def testConsistent( self ):
        paths = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 20000, seed = 11 )
        report = sampler.empiricalMiCheck( paths, 4 )

        self.assertEqual( report.name, 'sample' )
        self.assertAlmostEqual( report.getValue( 'bias' ), 4 * 4 / 40000.0, places = 15 )
        self.assertGreater( report.getValue( 'analytic' ), 0.0 )
        self.assertLessEqual( report.getValue( 'gap' ), 
            5.0 * report.getValue( 'spread' ) + report.getValue( 'bias' ) )
        self.assertEqual( report.config['split'], 4 )

    def testInvalid( self ):
        paths = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 20, seed = 0 )
        with self.assertRaises( ValidationError ):
            sampler.empiricalMiCheck( paths, 0 )

        with self.assertRaises( ValidationError ):
            sampler.empiricalMiCheck( paths, 8 )

        few = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 5, seed = 0 )
        with self.assertRaises( ValidationError ):
            sampler.empiricalMiCheck( few, 4 )

class ExportTest( unittest.TestCase ):

    def setUp( self ):
        self.directory = tempfile.mkdtemp()

    def tearDown( self ):
        shutil.rmtree( self.directory )

    def testBinaryAndSidecar( self ):
        paths = sampler.sampleFbmIncrements( 6, 0.5, 0.4, 3, seed = 9 )
        target = os.path.join( self.directory, 'paths.f64' )
        sampler.exportPaths( paths, target )

        data = np.fromfile( target, dtype = '<f8' ).reshape( 3, 6 )
        np.testing.assert_array_equal( data, paths.data )

        with open( target + '.json' ) as stream:
            sidecar = json.load( stream )

        self.assertEqual( sidecar, { 'n': 6, 'm': 3, 'dt': 0.5, 'H': 0.4, 'seed': 9, 'method': 'circulant' } )

if __name__ == '__main__':
    unittest.main()
